/*
 * C interface to the hermspec library: Hermitian adjacency matrices of
 * digraphs and mixed multigraphs, their spectra, and brute-force checks of
 * the spectral bounds they satisfy.
 *
 * Objects are opaque handles released with the matching *_free function.
 * Every fallible call returns an hs_status; on failure hs_last_error()
 * returns a message describing the most recent error on the calling thread.
 * Strings returned through char** are heap-allocated and must be released
 * with hs_string_free.
 */
#ifndef HERMSPEC_H
#define HERMSPEC_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(HERMSPEC_BUILDING)
#    define HS_API __declspec(dllexport)
#  else
#    define HS_API __declspec(dllimport)
#  endif
#else
#  define HS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values 2..5 double as the CLI exit codes. */
typedef enum hs_status {
  HS_OK = 0,
  HS_ERR_INVALID_ARGUMENT = 1,
  HS_ERR_PARSE = 2,
  HS_ERR_NUMERICAL = 3,
  HS_ERR_BOUND_VIOLATED = 4,
  HS_ERR_BUDGET_EXCEEDED = 5,
  HS_ERR_BUFFER_TOO_SMALL = 6,
  HS_ERR_INTERNAL = 7
} hs_status;

typedef struct hs_digraph hs_digraph;

/* Unit-modulus alpha = a + bi with a >= 0. Build with hs_alpha_make or
 * hs_alpha_parse so the invariants hold. */
typedef struct hs_alpha {
  double a;
  double b;
} hs_alpha;

typedef struct hs_jump {
  size_t offset;
  uint32_t mult;
} hs_jump;

HS_API const char* hs_version(void);
HS_API const char* hs_last_error(void);
HS_API const char* hs_status_name(hs_status status);
HS_API void hs_string_free(char* text);

HS_API hs_alpha hs_alpha_omega(void);
HS_API hs_status hs_alpha_make(double a, double b, hs_alpha* out);
/* "omega", "i", "1" or "a,b". */
HS_API hs_status hs_alpha_parse(const char* text, hs_alpha* out);

/* --- digraphs ----------------------------------------------------------- */

HS_API hs_status hs_digraph_new(size_t n, hs_digraph** out);
HS_API hs_status hs_digraph_clone(const hs_digraph* g, hs_digraph** out);
HS_API void hs_digraph_free(hs_digraph* g);

HS_API size_t hs_digraph_order(const hs_digraph* g);
HS_API hs_status hs_digraph_arc_mult(const hs_digraph* g, size_t u, size_t v, uint32_t* out);
HS_API hs_status hs_digraph_loop_mult(const hs_digraph* g, size_t v, uint32_t* out);

HS_API hs_status hs_digraph_add_arc(hs_digraph* g, size_t u, size_t v, uint32_t mult);
HS_API hs_status hs_digraph_add_edge(hs_digraph* g, size_t u, size_t v, uint32_t mult);
HS_API hs_status hs_digraph_add_loop(hs_digraph* g, size_t v, uint32_t mult);

/* Counts from the canonical decomposition: unpaired arcs, and digon pairs
 * plus loops. */
HS_API hs_status hs_digraph_arc_edge_counts(const hs_digraph* g, uint64_t* arcs, uint64_t* edges);

HS_API hs_status hs_digraph_parse(const char* text, hs_digraph** out);
HS_API hs_status hs_digraph_load(const char* path, hs_digraph** out);
HS_API hs_status hs_digraph_serialize(const hs_digraph* g, char** out);
/* 16 hex digits identifying the canonical edge list. */
HS_API hs_status hs_digraph_digest(const hs_digraph* g, char** out);

HS_API hs_status hs_digraph_induced(const hs_digraph* g, const size_t* vertices, size_t count,
                                    hs_digraph** out);
HS_API hs_status hs_digraph_directed_cycle(size_t n, hs_digraph** out);
HS_API hs_status hs_digraph_circulant(size_t n, const hs_jump* jumps, size_t count,
                                      hs_digraph** out);
HS_API hs_status hs_digraph_product(const hs_digraph* g, const hs_digraph* h, hs_digraph** out);
/* Seeded random mixed multigraph: each ordered pair gets an arc with
 * probability arc_p, each unordered pair a digon with probability edge_p,
 * multiplicities uniform in 1..max_mult. */
HS_API hs_status hs_digraph_random(size_t n, double arc_p, double edge_p, uint32_t max_mult,
                                   uint64_t seed, hs_digraph** out);

/* --- spectra ------------------------------------------------------------ */

/* JSON {"n": n, "re": [...], "im": [...]} of N^alpha(g). */
HS_API hs_status hs_matrix_json(const hs_digraph* g, hs_alpha alpha, char** out);

/* Eigenvalues of N^alpha(g), non-increasing. `values` must hold order(g)
 * doubles. */
HS_API hs_status hs_spectrum(const hs_digraph* g, hs_alpha alpha, double* values, size_t capacity);

/* Coefficients c_0..c_n of det(vI - N^alpha(g)); `coeffs` holds n + 1. */
HS_API hs_status hs_char_poly(const hs_digraph* g, hs_alpha alpha, double* coeffs, size_t capacity);

HS_API hs_status hs_max_independent_set(const hs_digraph* g, size_t* size);

/* --- reports -------------------------------------------------------------- */

/* Verification report as JSON. Returns HS_ERR_BOUND_VIOLATED when a check
 * fails; *out is filled in either case. zero_tol <= 0 keeps the default. */
HS_API hs_status hs_verify(const hs_digraph* g, hs_alpha alpha, double zero_tol, char** out);

/* Exhaustive search over 4-state digraphs on n <= 5 vertices for second-kind
 * characteristic polynomial `target` (n + 1 coefficients). Writes the JSON
 * manifest; matches carry their edge lists. include_runtime adds a
 * wall-clock field, which makes the output run-dependent. */
HS_API hs_status hs_search_charpoly(size_t n, const double* target, size_t count,
                                    int require_nonbipartite, size_t jobs, int include_runtime,
                                    char** out);

/* Minimum of min(eta+, eta-) over mixed orientations of an undirected
 * simple graph and the given alphas (default grid when count == 0).
 * allow_digons selects 3 states per edge instead of 2. */
HS_API hs_status hs_search_orientation(const hs_digraph* undirected, const hs_alpha* grid,
                                       size_t count, int allow_digons, uint64_t seed, char** out);

/* Circulant jump-set scan on n vertices, multiplicities 0..max_mult. targets
 * holds (mu1, mu_n) pairs. */
HS_API hs_status hs_search_circulant(size_t n, uint32_t max_mult, const double* targets,
                                     size_t target_count, double tol, char** out);

#ifdef __cplusplus
}
#endif

#endif /* HERMSPEC_H */
