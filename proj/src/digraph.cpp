#include "hermspec/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <limits>
#include <queue>
#include <sstream>

#include "hermspec/error.hpp"

namespace hermspec {

Digraph::Digraph(std::size_t n) : n_(n), arcs_(n * n, 0), loops_(n, 0) {}

void Digraph::check_vertex(Vertex v) const {
  if (v >= n_) {
    fail(ErrorKind::invalid_argument,
         "vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
  }
}

Multiplicity Digraph::arc_mult(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return u == v ? 0 : arcs_[u * n_ + v];
}

Multiplicity Digraph::loop_mult(Vertex v) const {
  check_vertex(v);
  return loops_[v];
}

Digraph& Digraph::add_arc(Vertex u, Vertex v, Multiplicity mult) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) fail(ErrorKind::invalid_argument, "add_arc: u == v; use add_loop");
  if (mult == 0) fail(ErrorKind::invalid_argument, "add_arc: multiplicity must be positive");
  arcs_[u * n_ + v] += mult;
  return *this;
}

Digraph& Digraph::add_edge(Vertex u, Vertex v, Multiplicity mult) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) fail(ErrorKind::invalid_argument, "add_edge: u == v; use add_loop");
  if (mult == 0) fail(ErrorKind::invalid_argument, "add_edge: multiplicity must be positive");
  arcs_[u * n_ + v] += mult;
  arcs_[v * n_ + u] += mult;
  return *this;
}

Digraph& Digraph::add_loop(Vertex v, Multiplicity mult) {
  check_vertex(v);
  if (mult == 0) fail(ErrorKind::invalid_argument, "add_loop: multiplicity must be positive");
  loops_[v] += mult;
  return *this;
}

std::uint64_t Digraph::total_arc_mult() const {
  std::uint64_t total = 0;
  for (Multiplicity m : arcs_) total += m;
  return total;
}

bool Digraph::adjacent(Vertex u, Vertex v) const {
  return arc_mult(u, v) > 0 || arc_mult(v, u) > 0;
}

Digraph induced_subdigraph(const Digraph& g, std::span<const Vertex> subset) {
  std::vector<bool> seen(g.order(), false);
  for (Vertex v : subset) {
    if (v >= g.order()) {
      fail(ErrorKind::invalid_argument, "induced_subdigraph: vertex " + std::to_string(v) +
                                            " is not in the digraph");
    }
    if (seen[v]) fail(ErrorKind::invalid_argument, "induced_subdigraph: duplicate vertex");
    seen[v] = true;
  }
  std::vector<Vertex> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());

  Digraph sub(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (auto m = g.loop_mult(sorted[i]); m > 0) sub.add_loop(i, m);
    for (std::size_t j = 0; j < sorted.size(); ++j) {
      if (i == j) continue;
      if (auto m = g.arc_mult(sorted[i], sorted[j]); m > 0) sub.add_arc(i, j, m);
    }
  }
  return sub;
}

std::optional<Bipartition> bipartition(const Digraph& g) {
  const std::size_t n = g.order();
  constexpr int uncoloured = -1;
  std::vector<int> colour(n, uncoloured);
  for (Vertex start = 0; start < n; ++start) {
    if (colour[start] != uncoloured) continue;
    colour[start] = 0;
    std::queue<Vertex> frontier;
    frontier.push(start);
    while (!frontier.empty()) {
      Vertex u = frontier.front();
      frontier.pop();
      if (g.loop_mult(u) > 0) return std::nullopt;
      for (Vertex v = 0; v < n; ++v) {
        if (v == u || !g.adjacent(u, v)) continue;
        if (colour[v] == uncoloured) {
          colour[v] = 1 - colour[u];
          frontier.push(v);
        } else if (colour[v] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition parts;
  parts.side.reserve(n);
  for (int c : colour) parts.side.push_back(c == 0 ? Side::x : Side::y);
  return parts;
}

bool is_valid_bipartition(const Digraph& g, const Bipartition& parts) {
  const std::size_t n = g.order();
  if (parts.side.size() != n) return false;
  for (Vertex v = 0; v < n; ++v) {
    if (g.loop_mult(v) > 0) return false;
    for (Vertex u = 0; u < n; ++u) {
      if (u != v && g.arc_mult(u, v) > 0 && parts.side[u] == parts.side[v]) return false;
    }
  }
  return true;
}

Digraph directed_cycle(std::size_t n) {
  if (n < 2) fail(ErrorKind::invalid_argument, "directed_cycle: length must be at least 2");
  Digraph g(n);
  for (Vertex i = 0; i < n; ++i) g.add_arc(i, (i + 1) % n);
  return g;
}

Digraph circulant(std::size_t n, std::span<const Jump> jumps) {
  for (const Jump& j : jumps) {
    if (j.offset < 1 || j.offset >= n) {
      fail(ErrorKind::invalid_argument, "circulant: offset " + std::to_string(j.offset) +
                                            " not in [1, " + std::to_string(n) + ")");
    }
    if (j.mult == 0) fail(ErrorKind::invalid_argument, "circulant: multiplicity must be positive");
  }
  Digraph g(n);
  for (Vertex i = 0; i < n; ++i) {
    for (const Jump& j : jumps) g.add_arc(i, (i + j.offset) % n, j.mult);
  }
  return g;
}

Digraph cartesian_product(const Digraph& g, const Digraph& h) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  Digraph p(ng * nh);
  auto index = [nh](Vertex i, Vertex x) { return i * nh + x; };
  for (Vertex i = 0; i < ng; ++i) {
    for (Vertex x = 0; x < nh; ++x) {
      for (Vertex j = 0; j < ng; ++j) {
        if (auto m = g.arc_mult(i, j); m > 0) p.add_arc(index(i, x), index(j, x), m);
      }
      for (Vertex y = 0; y < nh; ++y) {
        if (auto m = h.arc_mult(x, y); m > 0) p.add_arc(index(i, x), index(i, y), m);
      }
    }
  }
  return p;
}

ArcEdgeCounts arc_edge_counts(const Digraph& g) {
  ArcEdgeCounts counts;
  for (Vertex u = 0; u < g.order(); ++u) {
    counts.edges += g.loop_mult(u);
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const Multiplicity fwd = g.arc_mult(u, v);
      const Multiplicity bwd = g.arc_mult(v, u);
      counts.edges += std::min(fwd, bwd);
      counts.arcs += fwd > bwd ? fwd - bwd : bwd - fwd;
    }
  }
  return counts;
}

// ---------------------------------------------------------------------------
// Edge-list text format

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
    if (pos >= line.size()) break;
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t' && line[end] != '\r') ++end;
    fields.push_back(line.substr(pos, end - pos));
    pos = end;
  }
  return fields;
}

[[noreturn]] void parse_error(std::size_t line_no, const std::string& msg) {
  fail(ErrorKind::parse, "line " + std::to_string(line_no) + ": " + msg);
}

std::uint64_t parse_uint(std::string_view field, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    parse_error(line_no, "expected a non-negative integer, got '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

Digraph parse_edge_list(std::string_view text) {
  std::optional<Digraph> g;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto fields = split_fields(line);
    if (fields.empty()) continue;

    const std::string_view kind = fields[0];
    if (kind == "n") {
      if (g) parse_error(line_no, "duplicate 'n' line");
      if (fields.size() != 2) parse_error(line_no, "expected 'n <count>'");
      g.emplace(parse_uint(fields[1], line_no));
      continue;
    }
    if (!g) parse_error(line_no, "'n <count>' must precede all other lines");

    auto mult_at = [&](std::size_t idx) -> Multiplicity {
      if (fields.size() <= idx) return 1;
      const std::uint64_t m = parse_uint(fields[idx], line_no);
      if (m == 0 || m > std::numeric_limits<Multiplicity>::max()) {
        parse_error(line_no, "multiplicity out of range");
      }
      return static_cast<Multiplicity>(m);
    };
    auto vertex_at = [&](std::size_t idx) -> Vertex {
      const std::uint64_t v = parse_uint(fields[idx], line_no);
      if (v >= g->order()) parse_error(line_no, "vertex " + std::to_string(v) + " out of range");
      return static_cast<Vertex>(v);
    };

    if (kind == "a" || kind == "e") {
      if (fields.size() < 3 || fields.size() > 4) {
        parse_error(line_no, "expected '" + std::string(kind) + " <u> <v> [mult]'");
      }
      const Vertex u = vertex_at(1);
      const Vertex v = vertex_at(2);
      if (u == v) parse_error(line_no, "arc or edge endpoints must differ; use 'l' for loops");
      if (kind == "a") {
        g->add_arc(u, v, mult_at(3));
      } else {
        g->add_edge(u, v, mult_at(3));
      }
    } else if (kind == "l") {
      if (fields.size() < 2 || fields.size() > 3) parse_error(line_no, "expected 'l <v> [mult]'");
      g->add_loop(vertex_at(1), mult_at(2));
    } else {
      parse_error(line_no, "unknown directive '" + std::string(kind) + "'");
    }
  }
  if (!g) fail(ErrorKind::parse, "missing 'n <count>' line");
  return std::move(*g);
}

std::string serialize_edge_list(const Digraph& g) {
  std::ostringstream out;
  out << "n " << g.order() << '\n';
  auto emit = [&out](char kind, Vertex u, Vertex v, Multiplicity m) {
    out << kind << ' ' << u << ' ' << v;
    if (m != 1) out << ' ' << m;
    out << '\n';
  };
  for (Vertex u = 0; u < g.order(); ++u) {
    if (auto m = g.loop_mult(u); m > 0) {
      out << "l " << u;
      if (m != 1) out << ' ' << m;
      out << '\n';
    }
  }
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      const Multiplicity fwd = g.arc_mult(u, v);
      const Multiplicity bwd = g.arc_mult(v, u);
      const Multiplicity both = std::min(fwd, bwd);
      if (both > 0) emit('e', u, v, both);
      if (fwd > both) emit('a', u, v, fwd - both);
      if (bwd > both) emit('a', v, u, bwd - both);
    }
  }
  return out.str();
}

Digraph load_edge_list(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::parse, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

std::string digest(const Digraph& g) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize_edge_list(g)) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(hash));
  return hex;
}

}  // namespace hermspec
