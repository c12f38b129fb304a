#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hermspec/digraph.hpp"
#include "hermspec/eigen.hpp"
#include "hermspec/hermitian.hpp"

namespace hermspec {

// Brute-force oracles. Nothing here reads a Hermitian matrix entry: walk sums
// are built by traversing individual arcs, independent sets by subset search.

inline constexpr std::size_t max_walk_length = 10;

// Weighted walk counts from `start` for every length 0..max_length.
// result[k][v] is the sum over walks of length k from start to v of the
// product of step weights. Every parallel arc is a separate step choice,
// taken forwards with weight alpha or backwards with weight conj(alpha); a
// loop is a pair of opposite loops (one step each way).
std::vector<std::vector<Complex>> walk_weights_from(const Digraph& g, const AlphaParam& alpha,
                                                    Vertex start, std::size_t max_length);

Complex walk_weight_sum(const Digraph& g, const AlphaParam& alpha, Vertex u, Vertex v,
                        std::size_t length);

inline constexpr std::size_t max_independent_set_order = 20;

struct IndependentSet {
  std::size_t size = 0;
  std::vector<Vertex> witness;  // increasing
};

// Exact maximum independent set (no arc in either direction between any two
// members) by branch and bound over subsets. Loops do not exclude a vertex.
IndependentSet max_independent_set(const Digraph& g);

enum class PairStates {
  oriented,     // none, u->v, v->u
  with_digon,   // none, u->v, v->u, digon
  multi,        // e(u,v), e(v,u) independently in 0..max_mult
};

// Random-access view of every labeled loopless digraph on n vertices whose
// unordered pairs take the given states. Index i assigns pair p (pairs
// ordered (0,1), (0,2), ..., (n-2,n-1)) the p-th mixed-radix digit of i,
// least significant first. Enumerations with more than 50 million members
// throw ErrorKind::budget_exceeded.
class DigraphEnumeration {
 public:
  DigraphEnumeration(std::size_t n, PairStates states, Multiplicity max_mult = 1);

  std::uint64_t size() const noexcept { return count_; }
  std::size_t order() const noexcept { return n_; }
  Digraph at(std::uint64_t index) const;

 private:
  std::size_t n_;
  PairStates states_;
  Multiplicity max_mult_;
  std::uint64_t radix_;
  std::uint64_t count_;
};

inline constexpr std::uint64_t max_enumeration_size = 50'000'000;

// Convenience: materialize the whole enumeration.
std::vector<Digraph> enumerate_digraphs(std::size_t n, PairStates states, Multiplicity max_mult = 1);

struct CharPolyMatch {
  std::uint64_t index = 0;  // position in the with_digon enumeration
  Digraph digraph;
};

// All with_digon digraphs on n <= 5 vertices whose second-kind characteristic
// polynomial matches `target` within 1e-6 per coefficient, in enumeration
// order. Non-bipartite matches only when `require_nonbipartite`.
std::vector<CharPolyMatch> charpoly_search(std::size_t n, const std::vector<double>& target,
                                           bool require_nonbipartite, std::size_t jobs = 1);

inline constexpr std::size_t max_charpoly_search_order = 5;

// Jump-set scan over circulant(n, .) with every offset 1..n-1 given a
// multiplicity 0..max_mult. Reports the second-kind extreme eigenvalues of
// each nonempty jump set.
struct CirculantCandidate {
  std::vector<Jump> jumps;
  double mu1 = 0.0;
  double mu_n = 0.0;
};

std::vector<CirculantCandidate> circulant_scan(std::size_t n, Multiplicity max_mult);

}  // namespace hermspec
