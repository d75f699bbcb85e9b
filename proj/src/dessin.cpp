#include "mforge/dessin.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <ostream>

#include "mforge/error.hpp"

namespace mforge {

namespace {

using cplx = std::complex<double>;

std::vector<cplx> to_complex_coeffs(const Polynomial& p) {
  std::vector<cplx> out;
  for (long i = 0; i <= p.degree(); ++i)
    out.emplace_back(p.coeff(static_cast<std::size_t>(i)).to_double(), 0.0);
  return out;
}

cplx horner(const std::vector<cplx>& c, cplx z) {
  cplx acc = c.back();
  for (std::size_t i = c.size() - 1; i-- > 0;) acc = acc * z + c[i];
  return acc;
}

} // namespace

std::vector<cplx> roots_numeric(const std::vector<cplx>& ascending_coeffs,
                                double tol, int max_iter,
                                const std::vector<cplx>* warm_start) {
  std::vector<cplx> c = ascending_coeffs;
  while (!c.empty() && std::abs(c.back()) == 0.0) c.pop_back();
  if (c.size() < 2) throw UsageError("root solve needs degree >= 1");
  std::size_t n = c.size() - 1;
  std::vector<cplx> dc(n);
  for (std::size_t i = 1; i <= n; ++i) dc[i - 1] = static_cast<double>(i) * c[i];

  std::vector<cplx> z;
  if (warm_start && warm_start->size() == n) {
    z = *warm_start;
  } else {
    double bound = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      bound = std::max(bound, std::abs(c[i] / c[n]));
    double radius = 1.0 + bound;
    z.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      double angle = 2.0 * M_PI * (static_cast<double>(k) + 0.5) /
                         static_cast<double>(n) +
                     0.4; // fixed offset, avoids axis-symmetric stalls
      z[k] = radius * cplx(std::cos(angle), std::sin(angle));
    }
  }

  for (int iter = 0; iter < max_iter; ++iter) {
    bool converged = true;
    for (std::size_t k = 0; k < n; ++k) {
      cplx pv = horner(c, z[k]);
      // Rounding floor of the evaluation itself: below this the residual
      // carries no information and the point counts as converged.
      double az = std::abs(z[k]);
      double magnitude = std::abs(c.back());
      for (std::size_t i = c.size() - 1; i-- > 0;)
        magnitude = magnitude * az + std::abs(c[i]);
      if (std::abs(pv) <= 8.0 * std::numeric_limits<double>::epsilon() * magnitude)
        continue;
      cplx dv = horner(dc, z[k]);
      cplx newton;
      if (std::abs(dv) == 0.0) {
        newton = cplx(1e-6, 1e-6); // nudge off the critical point
      } else {
        newton = pv / dv;
      }
      if (std::abs(newton) >= tol) converged = false;
      cplx repulsion = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k && z[k] != z[j]) repulsion += 1.0 / (z[k] - z[j]);
      cplx denom = 1.0 - newton * repulsion;
      z[k] -= std::abs(denom) < 1e-14 ? newton : newton / denom;
    }
    if (converged) return z;
  }
  throw NumericError("root iteration did not converge in " +
                     std::to_string(max_iter) + " steps");
}

std::vector<cplx> roots_numeric(const Polynomial& p, double tol) {
  if (p.degree() < 1) throw UsageError("root solve needs degree >= 1");
  auto roots = roots_numeric(to_complex_coeffs(p), tol);
  std::sort(roots.begin(), roots.end(), [](const cplx& a, const cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

namespace {

// Greedy global-minimum pairing of previous chain heads with new fiber
// points; returns the new points ordered by chain, plus the largest matched
// step.
std::pair<std::vector<cplx>, double> match_points(const std::vector<cplx>& from,
                                                  const std::vector<cplx>& to) {
  std::size_t n = from.size();
  std::vector<cplx> ordered(n);
  std::vector<bool> used_from(n, false), used_to(n, false);
  double worst = 0.0;
  for (std::size_t round = 0; round < n; ++round) {
    double best = std::numeric_limits<double>::max();
    std::size_t bi = 0, bj = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (used_from[i]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (used_to[j]) continue;
        double d = std::abs(from[i] - to[j]);
        if (d < best) {
          best = d;
          bi = i;
          bj = j;
        }
      }
    }
    used_from[bi] = used_to[bj] = true;
    ordered[bi] = to[bj];
    worst = std::max(worst, best);
  }
  return {ordered, worst};
}

double min_pairwise_distance(const std::vector<cplx>& pts) {
  double best = std::numeric_limits<double>::max();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      best = std::min(best, std::abs(pts[i] - pts[j]));
  return best;
}

struct FiberSolver {
  std::vector<cplx> num, den;
  double tol;

  std::vector<cplx> solve(double t, const std::vector<cplx>* warm) const {
    std::vector<cplx> c(std::max(num.size(), den.size()), 0.0);
    for (std::size_t i = 0; i < num.size(); ++i) c[i] += num[i];
    for (std::size_t i = 0; i < den.size(); ++i) c[i] -= t * den[i];
    return roots_numeric(c, tol, 500, warm);
  }
};

} // namespace

DessinPlot render_dessin(const RationalFunction& F, int samples,
                         std::ostream* svg_sink) {
  if (samples < 8) throw UsageError("need at least 8 samples");
  ramification_profile(F); // certifies the map before any numerics
  long n = F.map_degree();

  DessinPlot plot;
  auto collect_vertices = [&](SpecialFiber fiber, std::vector<DessinVertex>& out) {
    for (const auto& [factor, mult] : fiber_factors(F, fiber))
      for (const cplx& root : roots_numeric(factor, 1e-13))
        out.push_back({root, mult, 0});
  };
  collect_vertices(SpecialFiber::zero, plot.black_vertices);
  collect_vertices(SpecialFiber::one, plot.white_vertices);
  if (static_cast<long>(plot.black_vertices.size()) == 0 ||
      F.num().degree() < n || (F.num() - F.den()).degree() < n)
    plot.warnings.push_back("a vertex lies at infinity and is not drawn");

  FiberSolver solver{to_complex_coeffs(F.num()), to_complex_coeffs(F.den()), 1e-12};

  double step = 1.0 / samples;
  const std::vector<cplx> base_heads = solver.solve(step, nullptr);
  const std::size_t chains = base_heads.size();

  // March t between two values; halve the step locally whenever a matched
  // move exceeds half the minimal distance between chain heads.
  std::function<void(std::vector<cplx>&, double, double, int,
                     std::vector<std::vector<cplx>>&)>
      march = [&](std::vector<cplx>& heads, double t_from, double t_to, int depth,
                  std::vector<std::vector<cplx>>& sink) {
        std::vector<cplx> next = solver.solve(t_to, &heads);
        auto [ordered, worst] = match_points(heads, next);
        double threshold = 0.5 * min_pairwise_distance(heads);
        if (worst > threshold && depth < 10) {
          double mid = 0.5 * (t_from + t_to);
          march(heads, t_from, mid, depth + 1, sink);
          march(heads, mid, t_to, depth + 1, sink);
          return;
        }
        if (worst > threshold)
          plot.warnings.push_back("ambiguous chaining near t=" + std::to_string(t_to));
        heads = ordered;
        for (std::size_t k = 0; k < chains; ++k) sink[k].push_back(heads[k]);
      };

  // The fiber clusters around its vertices only as t approaches 0 or 1, so
  // both ends are extended geometrically before vertices are attached.
  const int tail_steps = 24;
  std::vector<std::vector<cplx>> start_tail(chains), middle(chains), end_tail(chains);
  {
    std::vector<cplx> heads = base_heads;
    double t_prev = step;
    for (int i = 1; i <= tail_steps; ++i) {
      double t = step * std::pow(0.5, i);
      march(heads, t_prev, t, 0, start_tail);
      t_prev = t;
    }
  }
  {
    std::vector<cplx> heads = base_heads;
    for (std::size_t k = 0; k < chains; ++k) middle[k].push_back(heads[k]);
    for (int s = 2; s < samples; ++s)
      march(heads, (s - 1) * step, s * step, 0, middle);
    double t_prev = (samples - 1) * step;
    for (int i = 1; i <= tail_steps; ++i) {
      double t = 1.0 - step * std::pow(0.5, i);
      march(heads, t_prev, t, 0, end_tail);
      t_prev = t;
    }
  }
  std::vector<std::vector<cplx>> arcs(chains);
  for (std::size_t k = 0; k < chains; ++k) {
    arcs[k].assign(start_tail[k].rbegin(), start_tail[k].rend());
    arcs[k].insert(arcs[k].end(), middle[k].begin(), middle[k].end());
    arcs[k].insert(arcs[k].end(), end_tail[k].begin(), end_tail[k].end());
  }

  auto attach = [&](std::vector<DessinVertex>& vertices, bool at_start) {
    for (auto& arc : arcs) {
      const cplx endpoint = at_start ? arc.front() : arc.back();
      double best = std::numeric_limits<double>::max();
      DessinVertex* best_vertex = nullptr;
      for (auto& v : vertices) {
        double d = std::abs(endpoint - v.position);
        if (d < best) {
          best = d;
          best_vertex = &v;
        }
      }
      if (!best_vertex) continue;
      best_vertex->attached_arcs += 1;
      if (at_start)
        arc.insert(arc.begin(), best_vertex->position);
      else
        arc.push_back(best_vertex->position);
    }
  };
  attach(plot.black_vertices, true);
  attach(plot.white_vertices, false);
  plot.arcs = std::move(arcs);

  for (const auto& v : plot.black_vertices)
    if (v.attached_arcs != v.multiplicity)
      plot.warnings.push_back("black vertex degree mismatch: expected " +
                              std::to_string(v.multiplicity) + ", attached " +
                              std::to_string(v.attached_arcs));
  for (const auto& v : plot.white_vertices)
    if (v.attached_arcs != v.multiplicity)
      plot.warnings.push_back("white vertex degree mismatch: expected " +
                              std::to_string(v.multiplicity) + ", attached " +
                              std::to_string(v.attached_arcs));

  if (svg_sink) write_svg(plot, *svg_sink);
  return plot;
}

void write_svg(const DessinPlot& plot, std::ostream& os) {
  double lo_x = std::numeric_limits<double>::max(), lo_y = lo_x;
  double hi_x = std::numeric_limits<double>::lowest(), hi_y = hi_x;
  auto grow = [&](const cplx& p) {
    lo_x = std::min(lo_x, p.real());
    hi_x = std::max(hi_x, p.real());
    lo_y = std::min(lo_y, p.imag());
    hi_y = std::max(hi_y, p.imag());
  };
  for (const auto& arc : plot.arcs)
    for (const auto& p : arc) grow(p);
  for (const auto& v : plot.black_vertices) grow(v.position);
  for (const auto& v : plot.white_vertices) grow(v.position);
  if (lo_x > hi_x) {
    lo_x = lo_y = -1;
    hi_x = hi_y = 1;
  }
  double span = std::max(std::max(hi_x - lo_x, hi_y - lo_y), 1e-9);
  double scale = 560.0 / span;
  double pad = 40.0;
  auto tx = [&](const cplx& p) { return pad + (p.real() - lo_x) * scale; };
  auto ty = [&](const cplx& p) { return pad + (hi_y - p.imag()) * scale; };
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return std::string(buf);
  };

  double w = (hi_x - lo_x) * scale + 2 * pad;
  double h = (hi_y - lo_y) * scale + 2 * pad;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << fmt(w)
     << " " << fmt(h) << "\">\n";
  for (const auto& arc : plot.arcs) {
    os << "  <path fill=\"none\" stroke=\"black\" stroke-width=\"1.5\" d=\"";
    for (std::size_t i = 0; i < arc.size(); ++i)
      os << (i == 0 ? "M" : " L") << fmt(tx(arc[i])) << " " << fmt(ty(arc[i]));
    os << "\"/>\n";
  }
  for (const auto& v : plot.black_vertices)
    os << "  <rect x=\"" << fmt(tx(v.position) - 3) << "\" y=\""
       << fmt(ty(v.position) - 3) << "\" width=\"6\" height=\"6\" fill=\"black\"/>\n";
  for (const auto& v : plot.white_vertices)
    os << "  <circle cx=\"" << fmt(tx(v.position)) << "\" cy=\""
       << fmt(ty(v.position)) << "\" r=\"4\" fill=\"white\" stroke=\"black\"/>\n";
  os << "</svg>\n";
}

} // namespace mforge
