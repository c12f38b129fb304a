#include "doctest.h"

#include <vector>

#include "hermspec/digraph.hpp"
#include "hermspec/error.hpp"
#include "hermspec/random.hpp"

using namespace hermspec;

namespace {

// Odd closed walk in the underlying graph, by dynamic programming over walk
// parity. Independent of the BFS colouring under test.
bool has_odd_closed_walk(const Digraph& g) {
  const std::size_t n = g.order();
  for (Vertex s = 0; s < n; ++s) {
    if (g.loop_mult(s) > 0) return true;
    // reach[parity][v]
    std::vector<std::vector<bool>> reach(2, std::vector<bool>(n, false));
    reach[0][s] = true;
    for (std::size_t step = 0; step < 2 * n; ++step) {
      auto next = reach;
      for (int p = 0; p < 2; ++p) {
        for (Vertex u = 0; u < n; ++u) {
          if (!reach[p][u]) continue;
          for (Vertex v = 0; v < n; ++v) {
            if (u != v && g.adjacent(u, v)) next[1 - p][v] = true;
          }
        }
      }
      reach = next;
    }
    if (reach[1][s]) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("new digraph") {
  CHECK(Digraph(0).order() == 0);
  const Digraph three(3);
  CHECK(three.order() == 3);
  for (Vertex u = 0; u < 3; ++u) {
    for (Vertex v = 0; v < 3; ++v) CHECK(three.arc_mult(u, v) == 0);
  }
  Digraph one(1);
  one.add_loop(0);
  CHECK(one.loop_mult(0) == 1);
}

TEST_CASE("add_arc accumulates multiplicity and rejects bad input") {
  Digraph g(3);
  g.add_arc(0, 1).add_arc(0, 1);
  CHECK(g.arc_mult(0, 1) == 2);
  CHECK(g.arc_mult(1, 0) == 0);

  Digraph digon(2);
  digon.add_arc(0, 1).add_arc(1, 0);
  CHECK(digon.arc_mult(0, 1) == 1);
  CHECK(digon.arc_mult(1, 0) == 1);

  CHECK_THROWS_AS(g.add_arc(0, 5), Error);
  CHECK_THROWS_AS(g.add_arc(1, 1), Error);
  CHECK_THROWS_AS(g.add_arc(0, 1, 0), Error);
}

TEST_CASE("undirected edge is a digon") {
  Digraph a(3);
  a.add_edge(0, 1);
  CHECK(a.arc_mult(0, 1) == 1);
  CHECK(a.arc_mult(1, 0) == 1);

  Digraph b(3);
  b.add_edge(0, 1, 2);
  CHECK(b.arc_mult(0, 1) == 2);
  CHECK(b.arc_mult(1, 0) == 2);

  Digraph c(3);
  c.add_arc(0, 1, 2).add_arc(1, 0, 2);
  CHECK(b == c);

  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng.below(6);
    Digraph via_edges(n), via_arcs(n);
    for (int k = 0; k < 8; ++k) {
      const Vertex u = rng.below(n);
      Vertex v = rng.below(n);
      if (u == v) continue;
      const auto m = static_cast<Multiplicity>(1 + rng.below(3));
      via_edges.add_edge(u, v, m);
      via_arcs.add_arc(u, v, m).add_arc(v, u, m);
    }
    CHECK(via_edges == via_arcs);
  }
}

TEST_CASE("induced subdigraph") {
  const Digraph c3 = directed_cycle(3);
  const std::vector<Vertex> all = {0, 1, 2};
  CHECK(induced_subdigraph(c3, all) == c3);
  CHECK(induced_subdigraph(c3, {}).order() == 0);

  const std::vector<Vertex> first_two = {0, 1};
  Digraph expected(2);
  expected.add_arc(0, 1);
  CHECK(induced_subdigraph(c3, first_two) == expected);

  // Relabeling preserves order: {2, 0} -> 0 is old 0, 1 is old 2.
  const std::vector<Vertex> unordered = {2, 0};
  Digraph back(2);
  back.add_arc(1, 0);
  CHECK(induced_subdigraph(c3, unordered) == back);

  const std::vector<Vertex> bad = {0, 7};
  CHECK_THROWS_AS(induced_subdigraph(c3, bad), Error);
  const std::vector<Vertex> dup = {1, 1};
  CHECK_THROWS_AS(induced_subdigraph(c3, dup), Error);
}

TEST_CASE("bipartition") {
  const auto c4 = bipartition(directed_cycle(4));
  REQUIRE(c4);
  CHECK(c4->side[0] == c4->side[2]);
  CHECK(c4->side[1] == c4->side[3]);
  CHECK(c4->side[0] != c4->side[1]);

  CHECK_FALSE(bipartition(directed_cycle(3)));

  const Digraph edgeless(2);
  const auto parts = bipartition(edgeless);
  REQUIRE(parts);
  CHECK(is_valid_bipartition(edgeless, *parts));

  Digraph looped(2);
  looped.add_loop(0);
  CHECK_FALSE(bipartition(looped));
}

TEST_CASE("bipartition exists iff no odd closed walk") {
  Rng rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(8);
    const Digraph g = random_digraph(n, {0.2, 0.05, 1}, rng);
    const auto parts = bipartition(g);
    CHECK(parts.has_value() == !has_odd_closed_walk(g));
    if (parts) CHECK(is_valid_bipartition(g, *parts));
  }
}

TEST_CASE("directed cycle") {
  const Digraph c3 = directed_cycle(3);
  CHECK(c3.arc_mult(0, 1) == 1);
  CHECK(c3.arc_mult(1, 2) == 1);
  CHECK(c3.arc_mult(2, 0) == 1);
  CHECK(c3.total_arc_mult() == 3);

  const Digraph c2 = directed_cycle(2);
  CHECK(c2.arc_mult(0, 1) == 1);
  CHECK(c2.arc_mult(1, 0) == 1);

  CHECK(bipartition(directed_cycle(4)).has_value());
  CHECK_THROWS_AS(directed_cycle(1), Error);
}

TEST_CASE("circulant") {
  const std::vector<Jump> one = {{1, 1}};
  CHECK(circulant(3, one) == directed_cycle(3));

  const std::vector<Jump> half = {{2, 1}};
  Digraph two_digons(4);
  two_digons.add_edge(0, 2).add_edge(1, 3);
  CHECK(circulant(4, half) == two_digons);

  const std::vector<Jump> twelve = {{1, 1}, {2, 1}};
  const Digraph z5 = circulant(5, twelve);
  for (Vertex v = 0; v < 5; ++v) {
    Multiplicity out = 0;
    for (Vertex u = 0; u < 5; ++u) out += z5.arc_mult(v, u);
    CHECK(out == 2);
  }

  const std::vector<Jump> bad = {{5, 1}};
  CHECK_THROWS_AS(circulant(5, bad), Error);
  const std::vector<Jump> zero = {{0, 1}};
  CHECK_THROWS_AS(circulant(5, zero), Error);
}

TEST_CASE("cartesian product") {
  Digraph arc(2);
  arc.add_arc(0, 1);
  const Digraph point(1);
  CHECK(cartesian_product(arc, point) == arc);
  CHECK(cartesian_product(directed_cycle(3), point) == directed_cycle(3));

  const Digraph square = cartesian_product(directed_cycle(3), directed_cycle(3));
  CHECK(square.order() == 9);
  for (Vertex v = 0; v < 9; ++v) {
    Multiplicity out = 0;
    for (Vertex u = 0; u < 9; ++u) out += square.arc_mult(v, u);
    CHECK(out == 2);
  }

  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Digraph g = random_digraph(1 + rng.below(4), {0.4, 0.1, 2}, rng);
    const Digraph h = random_digraph(1 + rng.below(4), {0.4, 0.1, 2}, rng);
    const Digraph p = cartesian_product(g, h);
    CHECK(p.order() == g.order() * h.order());
    CHECK(p.total_arc_mult() == h.order() * g.total_arc_mult() + g.order() * h.total_arc_mult());
  }
}

TEST_CASE("arc and edge counts") {
  const Digraph digon = directed_cycle(2);
  CHECK(arc_edge_counts(digon).arcs == 0);
  CHECK(arc_edge_counts(digon).edges == 1);

  const auto c3 = arc_edge_counts(directed_cycle(3));
  CHECK(c3.arcs == 3);
  CHECK(c3.edges == 0);

  Digraph mixed(2);
  mixed.add_arc(0, 1, 2).add_arc(1, 0);
  CHECK(arc_edge_counts(mixed).arcs == 1);
  CHECK(arc_edge_counts(mixed).edges == 1);

  Digraph looped(1);
  looped.add_loop(0, 2);
  CHECK(arc_edge_counts(looped).edges == 2);
}

TEST_CASE("edge list parsing") {
  const Digraph g = parse_edge_list(
      "# mixed example\n"
      "n 4\n"
      "a 0 1\n"
      "e 1 2 2   # double edge\n"
      "l 3\n"
      "a 2 1\n");
  CHECK(g.order() == 4);
  CHECK(g.arc_mult(0, 1) == 1);
  CHECK(g.arc_mult(1, 2) == 2);
  CHECK(g.arc_mult(2, 1) == 3);
  CHECK(g.loop_mult(3) == 1);

  CHECK(parse_edge_list("n 0\n").order() == 0);

  auto parse_kind = [](const char* text) {
    try {
      parse_edge_list(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::invalid_argument;
  };
  CHECK(parse_kind("a 0 1\n") == ErrorKind::parse);
  CHECK(parse_kind("n 2\na 0 2\n") == ErrorKind::parse);
  CHECK(parse_kind("n 2\na 0 0\n") == ErrorKind::parse);
  CHECK(parse_kind("n 2\na 0 1 0\n") == ErrorKind::parse);
  CHECK(parse_kind("n 2\nx 0 1\n") == ErrorKind::parse);
  CHECK(parse_kind("n 2\nn 3\n") == ErrorKind::parse);
  CHECK(parse_kind("n two\n") == ErrorKind::parse);
  CHECK(parse_kind("") == ErrorKind::parse);
}

TEST_CASE("edge list round trip is exact") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    Digraph g = random_digraph(rng.below(9), {0.3, 0.2, 3}, rng);
    if (g.order() > 0 && rng.chance(0.3)) g.add_loop(rng.below(g.order()), 1 + rng.below(2));
    const std::string text = serialize_edge_list(g);
    CHECK(parse_edge_list(text) == g);
    CHECK(serialize_edge_list(parse_edge_list(text)) == text);
  }
}

TEST_CASE("canonical serialization writes digons as edges") {
  Digraph g(3);
  g.add_arc(0, 1, 2).add_arc(1, 0).add_arc(2, 1);
  CHECK(serialize_edge_list(g) == "n 3\ne 0 1\na 0 1\na 2 1\n");
  CHECK(digest(g) == digest(parse_edge_list(serialize_edge_list(g))));
  CHECK(digest(g) != digest(directed_cycle(3)));
  CHECK(digest(g).size() == 16);
}
