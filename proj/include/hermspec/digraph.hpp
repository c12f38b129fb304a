#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hermspec {

using Vertex = std::size_t;
using Multiplicity = std::uint32_t;

// Digraph with arc multiplicities e(u,v) and undirected loops.
//
// Undirected edges are not stored separately: an edge {u,v} is a digon, i.e.
// one arc in each direction. Vertices are 0..n-1. Storage is a dense n x n
// multiplicity table; the diagonal of that table is unused and loops live in
// their own vector.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n);

  std::size_t order() const noexcept { return n_; }

  Multiplicity arc_mult(Vertex u, Vertex v) const;
  Multiplicity loop_mult(Vertex v) const;

  // Builders mutate in place and return *this for chaining. All of them
  // reject out-of-range vertices and zero multiplicities; add_arc and
  // add_edge reject u == v (loops go through add_loop).
  Digraph& add_arc(Vertex u, Vertex v, Multiplicity mult = 1);
  Digraph& add_edge(Vertex u, Vertex v, Multiplicity mult = 1);
  Digraph& add_loop(Vertex v, Multiplicity mult = 1);

  // Sum of e(u,v) over all ordered pairs u != v. Loops are not included.
  std::uint64_t total_arc_mult() const;

  // True if at least one arc joins u and v, in either direction.
  bool adjacent(Vertex u, Vertex v) const;

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::vector<Multiplicity> arcs_;   // row-major n x n
  std::vector<Multiplicity> loops_;  // size n
};

enum class Side : std::uint8_t { x, y };

struct Bipartition {
  std::vector<Side> side;
};

struct ArcEdgeCounts {
  std::uint64_t arcs = 0;   // s: unpaired single arcs
  std::uint64_t edges = 0;  // t: digon pairs plus loops
};

// Order-preserving relabel of the subdigraph induced on `subset`. Duplicate
// or out-of-range vertices are rejected.
Digraph induced_subdigraph(const Digraph& g, std::span<const Vertex> subset);

// BFS 2-colouring of the underlying graph, component by component. Loops make
// a digraph non-bipartite.
std::optional<Bipartition> bipartition(const Digraph& g);

bool is_valid_bipartition(const Digraph& g, const Bipartition& parts);

Digraph directed_cycle(std::size_t n);

struct Jump {
  std::size_t offset = 0;
  Multiplicity mult = 1;
};

// Arcs i -> (i + offset) mod n for every vertex i and every jump.
Digraph circulant(std::size_t n, std::span<const Jump> jumps);

// Vertex (i, x) of the product has index i * h.order() + x.
Digraph cartesian_product(const Digraph& g, const Digraph& h);

// Canonical decomposition into single arcs and undirected edges: each
// unordered pair contributes min(e(u,v), e(v,u)) edges and the remainder as
// arcs; every loop counts as one undirected edge.
ArcEdgeCounts arc_edge_counts(const Digraph& g);

// Line-oriented edge-list text: `n <count>` then `a u v [m]`, `e u v [m]`,
// `l v [m]`; `#` starts a comment. Serialization is canonical (digons are
// written as `e` lines) and parse(serialize(g)) == g.
Digraph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Digraph& g);
Digraph load_edge_list(const std::string& path);

// 64-bit FNV-1a of the canonical edge list, as 16 hex digits.
std::string digest(const Digraph& g);

}  // namespace hermspec
