#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hermspec/digraph.hpp"
#include "hermspec/eigen.hpp"
#include "hermspec/hermitian.hpp"

namespace hermspec {

// max(|nu_1|, |nu_n|). Throws on an empty spectrum.
double spectral_radius(const Spectrum& sp);

struct EtaCounts {
  std::size_t eta_plus = 0;   // eigenvalues >= -zero_tol
  std::size_t eta_minus = 0;  // eigenvalues <= +zero_tol
};

EtaCounts eta_counts(const Spectrum& sp);

// nu_s >= kappa_s >= nu_{s+t} for s = 1..n-t, t = |parent| - |sub|, each
// inequality relaxed by parent.zero_tol + sub.zero_tol.
bool check_interlacing(const Spectrum& parent, const Spectrum& sub);

// Both eta counts of N^alpha(g) are at least k.
bool independence_bound_check(const Digraph& g, const AlphaParam& alpha, std::size_t k);

enum class OrientationStates { oriented, with_digon };

struct IndependenceSearchOptions {
  OrientationStates states = OrientationStates::with_digon;
  // Enumerate every orientation when states^|E| is at most this; otherwise
  // draw `sample_size` orientations from `seed`.
  std::size_t exhaustive_limit = 1'600'000;
  std::size_t sample_size = 20'000;
  std::uint64_t seed = 1;
};

struct IndependenceSearchResult {
  std::size_t bound = 0;
  Digraph witness;
  AlphaParam witness_alpha = AlphaParam::omega();
  bool exhaustive = true;
  std::size_t orientations_examined = 0;
};

// {omega, i, 1}: the unit sixth roots e^{i pi k / 3}, k = 0..2, that have
// non-negative real part, plus i.
std::vector<AlphaParam> default_alpha_grid();

// Minimum of min(eta+, eta-) over mixed orientations of an undirected simple
// graph (all-digon input) and over the alpha grid. Orientation j assigns edge
// e the base-3 (or base-2) digit e of j: forward, backward, digon; edges are
// ordered by (u, v), u < v. The first orientation (then alpha) attaining the
// minimum is the witness. Exact upper bound on the independence number when
// `exhaustive` is set.
IndependenceSearchResult best_independence_upper_bound(const Digraph& undirected,
                                                       const std::vector<AlphaParam>& alpha_grid,
                                                       const IndependenceSearchOptions& options = {});

// Sorted values equal their negation within sp.zero_tol.
bool is_spectrum_symmetric(const Spectrum& sp);

struct BipartiteSymmetryReport {
  bool eigenvector_flip = false;    // M z' = -lambda z' for every eigenpair
  bool spectrum_symmetric = false;
  bool odd_coeffs_vanish = false;   // c_k ~ 0 for odd k
  bool holds() const noexcept { return eigenvector_flip && spectrum_symmetric && odd_coeffs_vanish; }
};

// Checks spectral symmetry of M(g) for a bipartite g by the sign flip of
// eigenvectors, by the sorted spectrum, and by the odd characteristic
// polynomial coefficients. Throws ErrorKind::invalid_argument when g is not
// bipartite.
BipartiteSymmetryReport bipartite_symmetry_report(const Digraph& g);

// Sign-flip and sorted-spectrum checks only.
bool bipartite_symmetry_check(const Digraph& g);

enum class RadiusRegime { general, real_part, second_kind };

std::string to_string(RadiusRegime regime);

struct RadiusReport {
  double rho = 0.0;
  double nu1 = 0.0;
  double ratio = 1.0;  // nu1 / rho; 1 when rho = 0
  double bound_factor = 1.0 / 3.0;
  RadiusRegime regime = RadiusRegime::general;
  bool holds = false;
};

// Lower bound factor on nu_1 / rho: 1/2 for omega, a when a > 1/3, 1/3
// otherwise.
double radius_bound_factor(const AlphaParam& alpha, RadiusRegime* regime = nullptr);

RadiusReport radius_bound_report(const Digraph& g, const AlphaParam& alpha);

struct DegreeBoundReport {
  double d = 0.0;    // (s + 2t) / n
  double mu1 = 0.0;
  bool holds = false;
};

DegreeBoundReport degree_bound_report(const Digraph& g);

// Interlacing of N^alpha(g) against every single-vertex deletion.
struct InterlacingReport {
  std::size_t subgraphs_checked = 0;
  std::vector<Vertex> failures;  // deleted vertex of each failing subgraph
  bool holds() const noexcept { return failures.empty(); }
};

InterlacingReport single_deletion_interlacing(const Digraph& g, const AlphaParam& alpha);

}  // namespace hermspec
