#pragma once

#include <string>
#include <vector>

namespace mforge {

struct CriterionResult {
  int id = 0;
  std::string label;
  bool pass = false;
  std::string detail;
  double elapsed_ms = 0.0;
};

// Runs the full end-to-end reproduction: eleven independent checks covering
// the basis solutions, moment verification, group analysis, map counting,
// the Belyi certificates, the decomposition roundtrip and the rendered
// dessin. Each check reports pass/fail with a one-line summary.
std::vector<CriterionResult> run_acceptance_criteria();

} // namespace mforge
