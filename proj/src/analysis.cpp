#include "hermspec/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "hermspec/error.hpp"
#include "hermspec/random.hpp"

namespace hermspec {

double spectral_radius(const Spectrum& sp) {
  if (sp.values.empty()) fail(ErrorKind::invalid_argument, "spectral radius of an empty spectrum");
  return std::max(std::abs(sp.largest()), std::abs(sp.smallest()));
}

EtaCounts eta_counts(const Spectrum& sp) {
  EtaCounts counts;
  for (double x : sp.values) {
    if (x >= -sp.zero_tol) ++counts.eta_plus;
    if (x <= sp.zero_tol) ++counts.eta_minus;
  }
  return counts;
}

bool check_interlacing(const Spectrum& parent, const Spectrum& sub) {
  if (sub.size() > parent.size()) {
    fail(ErrorKind::invalid_argument, "interlacing: sub spectrum is longer than parent");
  }
  const std::size_t t = parent.size() - sub.size();
  const double tol = parent.zero_tol + sub.zero_tol;
  for (std::size_t s = 0; s < sub.size(); ++s) {
    if (parent.values[s] < sub.values[s] - tol) return false;
    if (sub.values[s] < parent.values[s + t] - tol) return false;
  }
  return true;
}

bool independence_bound_check(const Digraph& g, const AlphaParam& alpha, std::size_t k) {
  const EtaCounts eta = eta_counts(spectrum(build_matrix(g, alpha)));
  return eta.eta_plus >= k && eta.eta_minus >= k;
}

std::vector<AlphaParam> default_alpha_grid() {
  std::vector<AlphaParam> grid = {AlphaParam::omega(), AlphaParam::imaginary()};
  for (int k = 0; k <= 2; ++k) {
    const double angle = M_PI * k / 3.0;
    if (std::cos(angle) < -1e-12) continue;
    AlphaParam candidate(std::max(0.0, std::cos(angle)), std::sin(angle));
    const bool duplicate = std::any_of(grid.begin(), grid.end(), [&](const AlphaParam& p) {
      return std::abs(p.a() - candidate.a()) < 1e-12 && std::abs(p.b() - candidate.b()) < 1e-12;
    });
    if (!duplicate) grid.push_back(candidate);
  }
  return grid;
}

namespace {

struct Edge {
  Vertex u;
  Vertex v;
};

Digraph orient(std::size_t n, const std::vector<Edge>& edges, const std::vector<int>& state) {
  Digraph g(n);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    switch (state[e]) {
      case 0: g.add_arc(edges[e].u, edges[e].v); break;
      case 1: g.add_arc(edges[e].v, edges[e].u); break;
      default: g.add_edge(edges[e].u, edges[e].v); break;
    }
  }
  return g;
}

}  // namespace

IndependenceSearchResult best_independence_upper_bound(const Digraph& undirected,
                                                       const std::vector<AlphaParam>& alpha_grid,
                                                       const IndependenceSearchOptions& options) {
  if (alpha_grid.empty()) fail(ErrorKind::invalid_argument, "alpha grid is empty");
  const std::size_t n = undirected.order();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    if (undirected.loop_mult(u) > 0) {
      fail(ErrorKind::invalid_argument, "orientation search needs a loopless graph");
    }
    for (Vertex v = u + 1; v < n; ++v) {
      const Multiplicity fwd = undirected.arc_mult(u, v);
      const Multiplicity bwd = undirected.arc_mult(v, u);
      if (fwd != bwd || fwd > 1) {
        fail(ErrorKind::invalid_argument, "orientation search needs a simple undirected (all-digon) graph");
      }
      if (fwd == 1) edges.push_back({u, v});
    }
  }

  const int base = options.states == OrientationStates::with_digon ? 3 : 2;
  // Total orientation count, saturating at exhaustive_limit + 1.
  std::size_t total = 1;
  for (std::size_t e = 0; e < edges.size() && total <= options.exhaustive_limit; ++e) total *= base;

  IndependenceSearchResult result;
  result.exhaustive = total <= options.exhaustive_limit;
  result.bound = n + 1;
  std::vector<int> state(edges.size(), 0);
  Rng rng(options.seed);

  const std::size_t count = result.exhaustive ? total : options.sample_size;
  for (std::size_t index = 0; index < count; ++index) {
    if (result.exhaustive) {
      std::size_t rest = index;
      for (auto& digit : state) {
        digit = static_cast<int>(rest % base);
        rest /= base;
      }
    } else {
      for (auto& digit : state) digit = static_cast<int>(rng.below(base));
    }
    const Digraph candidate = orient(n, edges, state);
    for (const AlphaParam& alpha : alpha_grid) {
      const EtaCounts eta = eta_counts(spectrum(build_matrix(candidate, alpha)));
      const std::size_t value = std::min(eta.eta_plus, eta.eta_minus);
      if (value < result.bound) {
        result.bound = value;
        result.witness = candidate;
        result.witness_alpha = alpha;
      }
    }
    ++result.orientations_examined;
  }
  return result;
}

bool is_spectrum_symmetric(const Spectrum& sp) {
  const std::size_t n = sp.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(sp.values[j] + sp.values[n - 1 - j]) > sp.zero_tol) return false;
  }
  return true;
}

BipartiteSymmetryReport bipartite_symmetry_report(const Digraph& g) {
  const auto parts = bipartition(g);
  if (!parts) fail(ErrorKind::invalid_argument, "bipartite symmetry check on a non-bipartite digraph");

  const HermitianMatrix m = build_second_kind(g);
  const EigenDecomposition eig = hermitian_eigen(m);
  const double scale = std::max(1.0, m.frobenius_norm());
  const std::size_t n = g.order();

  BipartiteSymmetryReport report;
  report.eigenvector_flip = true;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Complex> flipped = eig.vectors[j];
    for (Vertex v = 0; v < n; ++v) {
      if (parts->side[v] == Side::y) flipped[v] = -flipped[v];
    }
    const std::vector<Complex> image = m.multiply(flipped);
    double residual2 = 0.0;
    for (Vertex v = 0; v < n; ++v) residual2 += std::norm(image[v] + eig.spectrum.values[j] * flipped[v]);
    if (std::sqrt(residual2) > 1e-8 * scale) report.eigenvector_flip = false;
  }
  report.spectrum_symmetric = is_spectrum_symmetric(eig.spectrum);

  const CharPoly poly = char_poly(m);
  report.odd_coeffs_vanish = true;
  for (std::size_t k = 1; k <= poly.degree(); k += 2) {
    if (std::abs(poly.coeffs[k]) > 1e-8 * coeff_scale(m, k)) report.odd_coeffs_vanish = false;
  }
  return report;
}

bool bipartite_symmetry_check(const Digraph& g) {
  const BipartiteSymmetryReport report = bipartite_symmetry_report(g);
  return report.eigenvector_flip && report.spectrum_symmetric;
}

std::string to_string(RadiusRegime regime) {
  switch (regime) {
    case RadiusRegime::general: return "general";
    case RadiusRegime::real_part: return "real_part";
    case RadiusRegime::second_kind: return "second_kind";
  }
  return "general";
}

double radius_bound_factor(const AlphaParam& alpha, RadiusRegime* regime) {
  RadiusRegime chosen = RadiusRegime::general;
  double factor = 1.0 / 3.0;
  if (alpha.is_omega()) {
    chosen = RadiusRegime::second_kind;
    factor = 0.5;
  } else if (alpha.a() > 1.0 / 3.0) {
    chosen = RadiusRegime::real_part;
    factor = alpha.a();
  }
  if (regime != nullptr) *regime = chosen;
  return factor;
}

RadiusReport radius_bound_report(const Digraph& g, const AlphaParam& alpha) {
  RadiusReport report;
  report.bound_factor = radius_bound_factor(alpha, &report.regime);
  if (g.order() == 0) {
    report.holds = true;
    return report;
  }
  const Spectrum sp = spectrum(build_matrix(g, alpha));
  report.rho = spectral_radius(sp);
  report.nu1 = sp.largest();
  report.ratio = report.rho > 0.0 ? report.nu1 / report.rho : 1.0;
  report.holds = report.nu1 >= report.bound_factor * report.rho - sp.zero_tol;
  return report;
}

DegreeBoundReport degree_bound_report(const Digraph& g) {
  if (g.order() == 0) fail(ErrorKind::invalid_argument, "average degree of an empty digraph");
  const ArcEdgeCounts counts = arc_edge_counts(g);
  const Spectrum sp = spectrum(build_second_kind(g));
  DegreeBoundReport report;
  report.d = static_cast<double>(counts.arcs + 2 * counts.edges) / static_cast<double>(g.order());
  report.mu1 = sp.largest();
  report.holds = report.mu1 >= report.d - sp.zero_tol;
  return report;
}

InterlacingReport single_deletion_interlacing(const Digraph& g, const AlphaParam& alpha) {
  InterlacingReport report;
  const std::size_t n = g.order();
  if (n == 0) return report;
  const Spectrum parent = spectrum(build_matrix(g, alpha));
  std::vector<Vertex> keep;
  for (Vertex removed = 0; removed < n; ++removed) {
    keep.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (v != removed) keep.push_back(v);
    }
    const Spectrum sub = spectrum(build_matrix(induced_subdigraph(g, keep), alpha));
    ++report.subgraphs_checked;
    if (!check_interlacing(parent, sub)) report.failures.push_back(removed);
  }
  return report;
}

}  // namespace hermspec
