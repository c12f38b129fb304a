#include "hermspec/hermspec.h"

#include <chrono>
#include <cstring>
#include <new>
#include <string>

#include "hermspec/analysis.hpp"
#include "hermspec/digraph.hpp"
#include "hermspec/eigen.hpp"
#include "hermspec/error.hpp"
#include "hermspec/hermitian.hpp"
#include "hermspec/oracle.hpp"
#include "hermspec/random.hpp"
#include "hermspec/report.hpp"

struct hs_digraph {
  hermspec::Digraph g;
};

namespace {

thread_local std::string last_error;

hs_status status_for(hermspec::ErrorKind kind) {
  switch (kind) {
    case hermspec::ErrorKind::invalid_argument: return HS_ERR_INVALID_ARGUMENT;
    case hermspec::ErrorKind::parse: return HS_ERR_PARSE;
    case hermspec::ErrorKind::numerical: return HS_ERR_NUMERICAL;
    case hermspec::ErrorKind::budget_exceeded: return HS_ERR_BUDGET_EXCEEDED;
  }
  return HS_ERR_INTERNAL;
}

hs_status set_error(hs_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs fn, translating exceptions into status codes.
template <typename Fn>
hs_status guarded(Fn&& fn) {
  try {
    last_error.clear();
    return fn();
  } catch (const hermspec::Error& e) {
    return set_error(status_for(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(HS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return set_error(HS_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

hermspec::AlphaParam to_alpha(hs_alpha alpha) { return {alpha.a, alpha.b}; }

hs_status null_argument() { return set_error(HS_ERR_INVALID_ARGUMENT, "null argument"); }

}  // namespace

extern "C" {

const char* hs_version(void) { return "1.0.0"; }

const char* hs_last_error(void) { return last_error.c_str(); }

const char* hs_status_name(hs_status status) {
  switch (status) {
    case HS_OK: return "ok";
    case HS_ERR_INVALID_ARGUMENT: return "invalid argument";
    case HS_ERR_PARSE: return "parse error";
    case HS_ERR_NUMERICAL: return "numerical failure";
    case HS_ERR_BOUND_VIOLATED: return "bound violated";
    case HS_ERR_BUDGET_EXCEEDED: return "budget exceeded";
    case HS_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case HS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

void hs_string_free(char* text) { delete[] text; }

hs_alpha hs_alpha_omega(void) {
  const auto w = hermspec::AlphaParam::omega();
  return {w.a(), w.b()};
}

hs_status hs_alpha_make(double a, double b, hs_alpha* out) {
  if (out == nullptr) return null_argument();
  return guarded([&] {
    const hermspec::AlphaParam alpha(a, b);
    *out = {alpha.a(), alpha.b()};
    return HS_OK;
  });
}

hs_status hs_alpha_parse(const char* text, hs_alpha* out) {
  if (text == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    const auto alpha = hermspec::AlphaParam::parse(text);
    *out = {alpha.a(), alpha.b()};
    return HS_OK;
  });
}

// --- digraphs ---------------------------------------------------------------

hs_status hs_digraph_new(size_t n, hs_digraph** out) {
  if (out == nullptr) return null_argument();
  return guarded([&] {
    *out = new hs_digraph{hermspec::Digraph(n)};
    return HS_OK;
  });
}

hs_status hs_digraph_clone(const hs_digraph* g, hs_digraph** out) {
  if (g == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = new hs_digraph{g->g};
    return HS_OK;
  });
}

void hs_digraph_free(hs_digraph* g) { delete g; }

size_t hs_digraph_order(const hs_digraph* g) { return g == nullptr ? 0 : g->g.order(); }

hs_status hs_digraph_arc_mult(const hs_digraph* g, size_t u, size_t v, uint32_t* out) {
  if (g == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = g->g.arc_mult(u, v);
    return HS_OK;
  });
}

hs_status hs_digraph_loop_mult(const hs_digraph* g, size_t v, uint32_t* out) {
  if (g == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = g->g.loop_mult(v);
    return HS_OK;
  });
}

hs_status hs_digraph_add_arc(hs_digraph* g, size_t u, size_t v, uint32_t mult) {
  if (g == nullptr) return null_argument();
  return guarded([&] {
    g->g.add_arc(u, v, mult);
    return HS_OK;
  });
}

hs_status hs_digraph_add_edge(hs_digraph* g, size_t u, size_t v, uint32_t mult) {
  if (g == nullptr) return null_argument();
  return guarded([&] {
    g->g.add_edge(u, v, mult);
    return HS_OK;
  });
}

hs_status hs_digraph_add_loop(hs_digraph* g, size_t v, uint32_t mult) {
  if (g == nullptr) return null_argument();
  return guarded([&] {
    g->g.add_loop(v, mult);
    return HS_OK;
  });
}

hs_status hs_digraph_arc_edge_counts(const hs_digraph* g, uint64_t* arcs, uint64_t* edges) {
  if (g == nullptr || arcs == nullptr || edges == nullptr) return null_argument();
  const auto counts = hermspec::arc_edge_counts(g->g);
  *arcs = counts.arcs;
  *edges = counts.edges;
  return HS_OK;
}

hs_status hs_digraph_parse(const char* text, hs_digraph** out) {
  if (text == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = new hs_digraph{hermspec::parse_edge_list(text)};
    return HS_OK;
  });
}

hs_status hs_digraph_load(const char* path, hs_digraph** out) {
  if (path == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = new hs_digraph{hermspec::load_edge_list(path)};
    return HS_OK;
  });
}

hs_status hs_digraph_serialize(const hs_digraph* g, char** out) {
  if (g == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = copy_string(hermspec::serialize_edge_list(g->g));
    return HS_OK;
  });
}

hs_status hs_digraph_digest(const hs_digraph* g, char** out) {
  if (g == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = copy_string(hermspec::digest(g->g));
    return HS_OK;
  });
}

hs_status hs_digraph_induced(const hs_digraph* g, const size_t* vertices, size_t count,
                             hs_digraph** out) {
  if (g == nullptr || out == nullptr || (vertices == nullptr && count > 0)) return null_argument();
  return guarded([&] {
    *out = new hs_digraph{hermspec::induced_subdigraph(g->g, {vertices, count})};
    return HS_OK;
  });
}

hs_status hs_digraph_directed_cycle(size_t n, hs_digraph** out) {
  if (out == nullptr) return null_argument();
  return guarded([&] {
    *out = new hs_digraph{hermspec::directed_cycle(n)};
    return HS_OK;
  });
}

hs_status hs_digraph_circulant(size_t n, const hs_jump* jumps, size_t count, hs_digraph** out) {
  if (out == nullptr || (jumps == nullptr && count > 0)) return null_argument();
  return guarded([&] {
    std::vector<hermspec::Jump> list;
    list.reserve(count);
    for (size_t i = 0; i < count; ++i) list.push_back({jumps[i].offset, jumps[i].mult});
    *out = new hs_digraph{hermspec::circulant(n, list)};
    return HS_OK;
  });
}

hs_status hs_digraph_product(const hs_digraph* g, const hs_digraph* h, hs_digraph** out) {
  if (g == nullptr || h == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = new hs_digraph{hermspec::cartesian_product(g->g, h->g)};
    return HS_OK;
  });
}

hs_status hs_digraph_random(size_t n, double arc_p, double edge_p, uint32_t max_mult,
                            uint64_t seed, hs_digraph** out) {
  if (out == nullptr) return null_argument();
  if (!(arc_p >= 0.0 && arc_p <= 1.0 && edge_p >= 0.0 && edge_p <= 1.0) || max_mult == 0) {
    return set_error(HS_ERR_INVALID_ARGUMENT, "probabilities must lie in [0, 1] and max_mult be positive");
  }
  return guarded([&] {
    hermspec::Rng rng(seed);
    *out = new hs_digraph{hermspec::random_digraph(n, {arc_p, edge_p, max_mult}, rng)};
    return HS_OK;
  });
}

// --- spectra ----------------------------------------------------------------

hs_status hs_matrix_json(const hs_digraph* g, hs_alpha alpha, char** out) {
  if (g == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    *out = copy_string(hermspec::matrix_to_json(hermspec::build_matrix(g->g, to_alpha(alpha))));
    return HS_OK;
  });
}

hs_status hs_spectrum(const hs_digraph* g, hs_alpha alpha, double* values, size_t capacity) {
  if (g == nullptr || (values == nullptr && g->g.order() > 0)) return null_argument();
  if (capacity < g->g.order()) return set_error(HS_ERR_BUFFER_TOO_SMALL, "spectrum buffer too small");
  return guarded([&] {
    const auto sp = hermspec::spectrum(hermspec::build_matrix(g->g, to_alpha(alpha)));
    std::copy(sp.values.begin(), sp.values.end(), values);
    return HS_OK;
  });
}

hs_status hs_char_poly(const hs_digraph* g, hs_alpha alpha, double* coeffs, size_t capacity) {
  if (g == nullptr || coeffs == nullptr) return null_argument();
  if (capacity < g->g.order() + 1) {
    return set_error(HS_ERR_BUFFER_TOO_SMALL, "coefficient buffer too small");
  }
  return guarded([&] {
    const auto poly = hermspec::char_poly(hermspec::build_matrix(g->g, to_alpha(alpha)));
    std::copy(poly.coeffs.begin(), poly.coeffs.end(), coeffs);
    return HS_OK;
  });
}

hs_status hs_max_independent_set(const hs_digraph* g, size_t* size) {
  if (g == nullptr || size == nullptr) return null_argument();
  return guarded([&] {
    *size = hermspec::max_independent_set(g->g).size;
    return HS_OK;
  });
}

// --- reports ----------------------------------------------------------------

hs_status hs_verify(const hs_digraph* g, hs_alpha alpha, double zero_tol, char** out) {
  if (g == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    const auto outcome = hermspec::verify_digraph(g->g, {to_alpha(alpha), zero_tol});
    *out = copy_string(outcome.json);
    if (!outcome.all_hold) {
      last_error = "one or more spectral bounds failed";
      return HS_ERR_BOUND_VIOLATED;
    }
    return HS_OK;
  });
}

hs_status hs_search_charpoly(size_t n, const double* target, size_t count,
                             int require_nonbipartite, size_t jobs, int include_runtime,
                             char** out) {
  if (target == nullptr || out == nullptr) return null_argument();
  return guarded([&] {
    const std::vector<double> coeffs(target, target + count);
    const auto start = std::chrono::steady_clock::now();
    const auto matches = hermspec::charpoly_search(n, coeffs, require_nonbipartite != 0, jobs);
    std::optional<double> runtime;
    if (include_runtime != 0) {
      runtime = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    *out = copy_string(
        hermspec::charpoly_search_manifest(n, coeffs, require_nonbipartite != 0, matches, runtime));
    return HS_OK;
  });
}

hs_status hs_search_orientation(const hs_digraph* undirected, const hs_alpha* grid, size_t count,
                                int allow_digons, uint64_t seed, char** out) {
  if (undirected == nullptr || out == nullptr || (grid == nullptr && count > 0)) return null_argument();
  return guarded([&] {
    std::vector<hermspec::AlphaParam> alphas;
    for (size_t i = 0; i < count; ++i) alphas.push_back(to_alpha(grid[i]));
    if (alphas.empty()) alphas = hermspec::default_alpha_grid();
    hermspec::IndependenceSearchOptions options;
    options.states = allow_digons != 0 ? hermspec::OrientationStates::with_digon
                                       : hermspec::OrientationStates::oriented;
    options.seed = seed;
    const auto result = hermspec::best_independence_upper_bound(undirected->g, alphas, options);
    *out = copy_string(hermspec::orientation_search_report(undirected->g, alphas, result));
    return HS_OK;
  });
}

hs_status hs_search_circulant(size_t n, uint32_t max_mult, const double* targets,
                              size_t target_count, double tol, char** out) {
  if (out == nullptr || (targets == nullptr && target_count > 0)) return null_argument();
  return guarded([&] {
    std::vector<hermspec::CirculantTarget> list;
    for (size_t i = 0; i < target_count; ++i) list.push_back({targets[2 * i], targets[2 * i + 1]});
    const auto candidates = hermspec::circulant_scan(n, max_mult);
    *out = copy_string(hermspec::circulant_scan_report(n, max_mult, candidates, list, tol));
    return HS_OK;
  });
}

}  // extern "C"
