#pragma once

#include <cstdint>
#include <random>

#include "hermspec/digraph.hpp"

namespace hermspec {

// Seeded generator whose derived draws do not depend on the standard
// library's distribution implementations, so a seed reproduces the same
// digraphs on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

struct RandomDigraphOptions {
  double arc_probability = 0.3;   // per ordered pair
  double edge_probability = 0.1;  // per unordered pair, added as a digon
  Multiplicity max_mult = 1;      // each added arc/edge gets 1..max_mult
};

Digraph random_digraph(std::size_t n, const RandomDigraphOptions& options, Rng& rng);

// Random digraph with a planted bipartition: vertex v is on side X iff the
// corresponding bit of a random mask is clear. Arcs only cross the sides.
Digraph random_bipartite_digraph(std::size_t n, double arc_probability, Multiplicity max_mult,
                                 Rng& rng);

}  // namespace hermspec
