#include "hermspec/random.hpp"

#include <vector>

#include "hermspec/error.hpp"

namespace hermspec {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) fail(ErrorKind::invalid_argument, "Rng::below: bound must be positive");
  // Rejection sampling removes modulo bias.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

namespace {

Multiplicity draw_mult(Multiplicity max_mult, Rng& rng) {
  return max_mult <= 1 ? 1 : static_cast<Multiplicity>(1 + rng.below(max_mult));
}

}  // namespace

Digraph random_digraph(std::size_t n, const RandomDigraphOptions& options, Rng& rng) {
  Digraph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if (rng.chance(options.arc_probability)) g.add_arc(u, v, draw_mult(options.max_mult, rng));
      if (u < v && rng.chance(options.edge_probability)) {
        g.add_edge(u, v, draw_mult(options.max_mult, rng));
      }
    }
  }
  return g;
}

Digraph random_bipartite_digraph(std::size_t n, double arc_probability, Multiplicity max_mult,
                                 Rng& rng) {
  std::vector<bool> on_y(n);
  for (std::size_t v = 0; v < n; ++v) on_y[v] = rng.chance(0.5);
  Digraph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v || on_y[u] == on_y[v]) continue;
      if (rng.chance(arc_probability)) g.add_arc(u, v, draw_mult(max_mult, rng));
    }
  }
  return g;
}

}  // namespace hermspec
