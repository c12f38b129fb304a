#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermspec/analysis.hpp"
#include "hermspec/digraph.hpp"
#include "hermspec/hermitian.hpp"
#include "hermspec/oracle.hpp"

namespace hermspec {

// Version tag carried by every JSON document the library emits.
inline constexpr const char* schema_version = "hermspec/1";

struct VerifyOptions {
  AlphaParam alpha = AlphaParam::omega();
  // Replaces the default eigenvalue zero band for eta counting when positive.
  double zero_tol = 0.0;
};

struct VerifyOutcome {
  bool all_hold = false;
  std::string json;
};

// Runs the average-degree bound, the radius bound for alpha, eta counts
// against the exact independence number (n <= 20), bipartite symmetry when a
// bipartition exists, and interlacing over every single-vertex deletion.
VerifyOutcome verify_digraph(const Digraph& g, const VerifyOptions& options);

std::string charpoly_search_manifest(std::size_t n, const std::vector<double>& target,
                                     bool require_nonbipartite,
                                     const std::vector<CharPolyMatch>& matches,
                                     std::optional<double> runtime_ms);

std::string orientation_search_report(const Digraph& undirected,
                                      const std::vector<AlphaParam>& grid,
                                      const IndependenceSearchResult& result);

struct CirculantTarget {
  double mu1 = 0.0;
  double mu_n = 0.0;
};

// Scan results plus, for each target, the candidate nearest to it and
// whether that candidate is within `tol` in both extremes.
std::string circulant_scan_report(std::size_t n, Multiplicity max_mult,
                                  const std::vector<CirculantCandidate>& candidates,
                                  const std::vector<CirculantTarget>& targets, double tol);

}  // namespace hermspec
