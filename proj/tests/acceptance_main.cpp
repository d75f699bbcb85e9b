// Acceptance suite: runs every end-to-end criterion and prints one line per
// criterion. Exit code 0 iff everything passed.

#include <cstdio>

#include "mforge/reproduce.hpp"

int main() {
  auto results = mforge::run_acceptance_criteria();
  bool all_pass = true;
  for (const auto& r : results) {
    std::printf("[%s] criterion %2d: %s - %s (%.0f ms)\n",
                r.pass ? "PASS" : "FAIL", r.id, r.label.c_str(), r.detail.c_str(),
                r.elapsed_ms);
    all_pass = all_pass && r.pass;
  }
  std::printf("%s\n", all_pass ? "acceptance: all criteria passed"
                               : "acceptance: FAILURES present");
  return all_pass ? 0 : 1;
}
