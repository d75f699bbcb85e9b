#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "mforge/belyi.hpp"

namespace mforge {

// Simultaneous root iteration (Aberth-Ehrlich) with deterministic initial
// placement on a circle; converges when every Newton residual
// |p(r)|/|p'(r)| drops below tol. NumericError on non-convergence.
std::vector<std::complex<double>> roots_numeric(const Polynomial& p,
                                                double tol = 1e-12);
std::vector<std::complex<double>> roots_numeric(
    const std::vector<std::complex<double>>& ascending_coeffs, double tol = 1e-12,
    int max_iter = 500,
    const std::vector<std::complex<double>>* warm_start = nullptr);

struct DessinVertex {
  std::complex<double> position;
  int multiplicity = 0;  // exact fiber multiplicity
  int attached_arcs = 0; // arcs that end at this vertex
};

/// Preimage of the segment [0,1]: one polyline per edge, black vertices over
/// 0, white vertices over 1.
struct DessinPlot {
  std::vector<std::vector<std::complex<double>>> arcs;
  std::vector<DessinVertex> black_vertices;
  std::vector<DessinVertex> white_vertices;
  std::vector<std::string> warnings;
};

// Tracks the deg F fiber points across a t-grid of `samples` points in
// (0,1), chaining them by nearest-neighbour matching (with local grid
// refinement when two points come too close), then attaches the chain ends
// to the vertices. F must certify as ramified only over {0,1,infinity}.
DessinPlot render_dessin(const RationalFunction& F, int samples,
                         std::ostream* svg_sink = nullptr);

void write_svg(const DessinPlot& plot, std::ostream& os);

} // namespace mforge
