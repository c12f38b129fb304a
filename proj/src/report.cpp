#include "hermspec/report.hpp"

#include <cmath>
#include <limits>

#include "json.hpp"

namespace hermspec {

using nlohmann::json;

namespace {

json jump_list(const std::vector<Jump>& jumps) {
  json out = json::array();
  for (const Jump& j : jumps) out.push_back({{"offset", j.offset}, {"mult", j.mult}});
  return out;
}

}  // namespace

VerifyOutcome verify_digraph(const Digraph& g, const VerifyOptions& options) {
  const std::size_t n = g.order();
  const HermitianMatrix m = build_matrix(g, options.alpha);
  Spectrum sp = spectrum(m);
  if (options.zero_tol > 0.0) sp.zero_tol = options.zero_tol;

  json doc;
  doc["schema"] = schema_version;
  doc["command"] = "verify";
  doc["input_digest"] = digest(g);
  doc["n"] = n;
  doc["alpha"] = options.alpha.to_string();
  doc["spectrum"] = sp.values;
  doc["zero_tol"] = sp.zero_tol;

  bool all_hold = true;
  json checks = json::object();

  if (n > 0) {
    const DegreeBoundReport degree = degree_bound_report(g);
    checks["degree_bound"] = {{"d", degree.d}, {"mu1", degree.mu1}, {"holds", degree.holds}};
    all_hold = all_hold && degree.holds;
  } else {
    checks["degree_bound"] = {{"skipped", true}, {"reason", "empty digraph"}};
  }

  const RadiusReport radius = radius_bound_report(g, options.alpha);
  checks["radius_bound"] = {{"rho", radius.rho},
                            {"nu1", radius.nu1},
                            {"ratio", radius.ratio},
                            {"bound_factor", radius.bound_factor},
                            {"regime", to_string(radius.regime)},
                            {"holds", radius.holds}};
  all_hold = all_hold && radius.holds;

  if (n <= max_independent_set_order) {
    const IndependentSet indep = max_independent_set(g);
    const EtaCounts eta = eta_counts(sp);
    const bool holds = eta.eta_plus >= indep.size && eta.eta_minus >= indep.size;
    checks["independence_bound"] = {{"k", indep.size},
                                    {"witness", indep.witness},
                                    {"eta_plus", eta.eta_plus},
                                    {"eta_minus", eta.eta_minus},
                                    {"holds", holds}};
    all_hold = all_hold && holds;
  } else {
    checks["independence_bound"] = {{"skipped", true}, {"reason", "more than 20 vertices"}};
  }

  if (bipartition(g)) {
    const BipartiteSymmetryReport sym = bipartite_symmetry_report(g);
    checks["bipartite_symmetry"] = {{"applicable", true},
                                    {"eigenvector_flip", sym.eigenvector_flip},
                                    {"spectrum_symmetric", sym.spectrum_symmetric},
                                    {"odd_coeffs_vanish", sym.odd_coeffs_vanish},
                                    {"holds", sym.holds()}};
    all_hold = all_hold && sym.holds();
  } else {
    checks["bipartite_symmetry"] = {{"applicable", false}};
  }

  const InterlacingReport inter = single_deletion_interlacing(g, options.alpha);
  checks["interlacing"] = {{"subgraphs_checked", inter.subgraphs_checked},
                           {"failed_deletions", inter.failures},
                           {"holds", inter.holds()}};
  all_hold = all_hold && inter.holds();

  doc["checks"] = std::move(checks);
  doc["all_hold"] = all_hold;
  doc["counterexample"] = all_hold ? json(nullptr) : json(serialize_edge_list(g));
  return {all_hold, doc.dump(2)};
}

std::string charpoly_search_manifest(std::size_t n, const std::vector<double>& target,
                                     bool require_nonbipartite,
                                     const std::vector<CharPolyMatch>& matches,
                                     std::optional<double> runtime_ms) {
  json doc;
  doc["schema"] = schema_version;
  doc["command"] = "search charpoly";
  doc["n"] = n;
  doc["target"] = target;
  doc["require_nonbipartite"] = require_nonbipartite;
  doc["enumerated"] = DigraphEnumeration(n, PairStates::with_digon).size();
  doc["match_count"] = matches.size();
  json list = json::array();
  for (const CharPolyMatch& match : matches) {
    list.push_back({{"index", match.index},
                    {"digest", digest(match.digraph)},
                    {"spectrum", spectrum(build_second_kind(match.digraph)).values},
                    {"edge_list", serialize_edge_list(match.digraph)}});
  }
  doc["matches"] = std::move(list);
  if (runtime_ms) doc["runtime_ms"] = *runtime_ms;
  return doc.dump(2);
}

std::string orientation_search_report(const Digraph& undirected,
                                      const std::vector<AlphaParam>& grid,
                                      const IndependenceSearchResult& result) {
  json doc;
  doc["schema"] = schema_version;
  doc["command"] = "search orientation";
  doc["input_digest"] = digest(undirected);
  doc["n"] = undirected.order();
  json alphas = json::array();
  for (const AlphaParam& a : grid) alphas.push_back(a.to_string());
  doc["alpha_grid"] = std::move(alphas);
  doc["bound"] = result.bound;
  doc["exhaustive"] = result.exhaustive;
  doc["orientations_examined"] = result.orientations_examined;
  if (undirected.order() <= max_independent_set_order) {
    doc["independence_number"] = max_independent_set(undirected).size;
  }
  doc["witness"] = {{"alpha", result.witness_alpha.to_string()},
                    {"edge_list", serialize_edge_list(result.witness)}};
  return doc.dump(2);
}

std::string circulant_scan_report(std::size_t n, Multiplicity max_mult,
                                  const std::vector<CirculantCandidate>& candidates,
                                  const std::vector<CirculantTarget>& targets, double tol) {
  json doc;
  doc["schema"] = schema_version;
  doc["command"] = "search circulant";
  doc["n"] = n;
  doc["max_mult"] = max_mult;
  doc["candidates_scanned"] = candidates.size();
  doc["tolerance"] = tol;
  json results = json::array();
  for (const CirculantTarget& t : targets) {
    const CirculantCandidate* nearest = nullptr;
    double best = std::numeric_limits<double>::infinity();
    for (const CirculantCandidate& c : candidates) {
      const double dist = std::max(std::abs(c.mu1 - t.mu1), std::abs(c.mu_n - t.mu_n));
      if (dist < best) {
        best = dist;
        nearest = &c;
      }
    }
    json entry = {{"target_mu1", t.mu1}, {"target_mu_n", t.mu_n}};
    if (nearest != nullptr) {
      entry["found"] = best <= tol;
      entry["distance"] = best;
      entry["nearest"] = {{"jumps", jump_list(nearest->jumps)},
                          {"mu1", nearest->mu1},
                          {"mu_n", nearest->mu_n},
                          {"abs_ratio", nearest->mu1 != 0.0 ? std::abs(nearest->mu_n) / nearest->mu1 : 0.0}};
    } else {
      entry["found"] = false;
    }
    results.push_back(std::move(entry));
  }
  doc["targets"] = std::move(results);
  return doc.dump(2);
}

}  // namespace hermspec
