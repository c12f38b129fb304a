#include "hermspec/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "hermspec/error.hpp"
#include "parallel.hpp"

namespace hermspec {

namespace {

struct Step {
  Vertex to;
  Complex weight;
};

// One entry per traversable arc object and direction.
std::vector<std::vector<Step>> step_lists(const Digraph& g, const AlphaParam& alpha) {
  const std::size_t n = g.order();
  std::vector<std::vector<Step>> steps(n);
  for (Vertex v = 0; v < n; ++v) {
    for (Multiplicity i = 0; i < g.loop_mult(v); ++i) {
      steps[v].push_back({v, alpha.value()});
      steps[v].push_back({v, alpha.conj()});
    }
    for (Vertex u = 0; u < n; ++u) {
      if (u == v) continue;
      for (Multiplicity i = 0; i < g.arc_mult(v, u); ++i) {
        steps[v].push_back({u, alpha.value()});  // along v -> u
        steps[u].push_back({v, alpha.conj()});   // against v -> u
      }
    }
  }
  return steps;
}

void extend_walks(const std::vector<std::vector<Step>>& steps, Vertex at, Complex weight,
                  std::size_t depth, std::vector<std::vector<Complex>>& out) {
  out[depth][at] += weight;
  if (depth + 1 == out.size()) return;
  for (const Step& s : steps[at]) extend_walks(steps, s.to, weight * s.weight, depth + 1, out);
}

}  // namespace

std::vector<std::vector<Complex>> walk_weights_from(const Digraph& g, const AlphaParam& alpha,
                                                    Vertex start, std::size_t max_length) {
  if (max_length > max_walk_length) {
    fail(ErrorKind::budget_exceeded, "walk length " + std::to_string(max_length) + " exceeds budget of " +
                                         std::to_string(max_walk_length));
  }
  if (start >= g.order()) fail(ErrorKind::invalid_argument, "walk start vertex out of range");
  std::vector<std::vector<Complex>> out(max_length + 1, std::vector<Complex>(g.order(), 0.0));
  extend_walks(step_lists(g, alpha), start, 1.0, 0, out);
  return out;
}

Complex walk_weight_sum(const Digraph& g, const AlphaParam& alpha, Vertex u, Vertex v,
                        std::size_t length) {
  if (v >= g.order()) fail(ErrorKind::invalid_argument, "walk end vertex out of range");
  return walk_weights_from(g, alpha, u, length)[length][v];
}

// ---------------------------------------------------------------------------

namespace {

using Mask = std::uint32_t;

void grow_independent(const std::vector<Mask>& neighbours, Mask chosen, Mask candidates,
                      Mask& best) {
  if (candidates == 0) {
    if (std::popcount(chosen) > std::popcount(best)) best = chosen;
    return;
  }
  if (std::popcount(chosen) + std::popcount(candidates) <= std::popcount(best)) return;
  const int v = std::countr_zero(candidates);
  const Mask bit = Mask{1} << v;
  grow_independent(neighbours, chosen | bit, candidates & ~bit & ~neighbours[v], best);
  grow_independent(neighbours, chosen, candidates & ~bit, best);
}

}  // namespace

IndependentSet max_independent_set(const Digraph& g) {
  const std::size_t n = g.order();
  if (n > max_independent_set_order) {
    fail(ErrorKind::budget_exceeded, "independent set search is limited to 20 vertices");
  }
  std::vector<Mask> neighbours(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && g.adjacent(u, v)) neighbours[u] |= Mask{1} << v;
    }
  }
  Mask best = 0;
  const Mask all = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
  grow_independent(neighbours, 0, all, best);

  IndependentSet result;
  result.size = static_cast<std::size_t>(std::popcount(best));
  for (Vertex v = 0; v < n; ++v) {
    if (best & (Mask{1} << v)) result.witness.push_back(v);
  }
  return result;
}

// ---------------------------------------------------------------------------

DigraphEnumeration::DigraphEnumeration(std::size_t n, PairStates states, Multiplicity max_mult)
    : n_(n), states_(states), max_mult_(max_mult) {
  switch (states) {
    case PairStates::oriented: radix_ = 3; break;
    case PairStates::with_digon: radix_ = 4; break;
    case PairStates::multi:
      if (max_mult == 0) fail(ErrorKind::invalid_argument, "max_mult must be positive");
      radix_ = static_cast<std::uint64_t>(max_mult + 1) * (max_mult + 1);
      break;
  }
  const std::size_t pairs = n * (n == 0 ? 0 : n - 1) / 2;
  count_ = 1;
  for (std::size_t p = 0; p < pairs; ++p) {
    if (count_ > max_enumeration_size / radix_) {
      fail(ErrorKind::budget_exceeded, "enumeration of order " + std::to_string(n) +
                                           " exceeds the budget of 50000000 digraphs");
    }
    count_ *= radix_;
  }
}

Digraph DigraphEnumeration::at(std::uint64_t index) const {
  if (index >= count_) fail(ErrorKind::invalid_argument, "enumeration index out of range");
  Digraph g(n_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      const std::uint64_t digit = index % radix_;
      index /= radix_;
      Multiplicity fwd = 0;
      Multiplicity bwd = 0;
      if (states_ == PairStates::multi) {
        fwd = static_cast<Multiplicity>(digit % (max_mult_ + 1));
        bwd = static_cast<Multiplicity>(digit / (max_mult_ + 1));
      } else {
        fwd = (digit == 1 || digit == 3) ? 1 : 0;
        bwd = (digit == 2 || digit == 3) ? 1 : 0;
      }
      if (fwd > 0) g.add_arc(u, v, fwd);
      if (bwd > 0) g.add_arc(v, u, bwd);
    }
  }
  return g;
}

std::vector<Digraph> enumerate_digraphs(std::size_t n, PairStates states, Multiplicity max_mult) {
  const DigraphEnumeration all(n, states, max_mult);
  std::vector<Digraph> out;
  out.reserve(all.size());
  for (std::uint64_t i = 0; i < all.size(); ++i) out.push_back(all.at(i));
  return out;
}

std::vector<CharPolyMatch> charpoly_search(std::size_t n, const std::vector<double>& target,
                                           bool require_nonbipartite, std::size_t jobs) {
  if (n > max_charpoly_search_order) {
    fail(ErrorKind::budget_exceeded, "characteristic polynomial search is limited to 5 vertices");
  }
  if (target.size() != n + 1) {
    fail(ErrorKind::invalid_argument, "target polynomial must have n + 1 coefficients");
  }
  const DigraphEnumeration all(n, PairStates::with_digon);
  auto scan = [&](std::uint64_t begin, std::uint64_t end) {
    std::vector<CharPolyMatch> found;
    for (std::uint64_t i = begin; i < end; ++i) {
      Digraph g = all.at(i);
      const CharPoly poly = char_poly(build_second_kind(g));
      bool match = true;
      for (std::size_t k = 0; k <= n && match; ++k) match = std::abs(poly.coeffs[k] - target[k]) <= 1e-6;
      if (!match) continue;
      if (require_nonbipartite && bipartition(g)) continue;
      found.push_back({i, std::move(g)});
    }
    return found;
  };
  std::vector<CharPolyMatch> matches;
  for (auto& chunk : detail::parallel_chunks<std::vector<CharPolyMatch>>(all.size(), jobs, scan)) {
    std::move(chunk.begin(), chunk.end(), std::back_inserter(matches));
  }
  return matches;
}

std::vector<CirculantCandidate> circulant_scan(std::size_t n, Multiplicity max_mult) {
  if (n < 2) fail(ErrorKind::invalid_argument, "circulant scan needs n >= 2");
  if (max_mult == 0) fail(ErrorKind::invalid_argument, "max_mult must be positive");
  const std::size_t offsets = n - 1;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < offsets; ++i) {
    total *= max_mult + 1;
    if (total > max_enumeration_size) fail(ErrorKind::budget_exceeded, "circulant scan exceeds budget");
  }
  std::vector<CirculantCandidate> out;
  for (std::uint64_t index = 1; index < total; ++index) {
    CirculantCandidate c;
    std::uint64_t rest = index;
    for (std::size_t offset = 1; offset <= offsets; ++offset) {
      const auto m = static_cast<Multiplicity>(rest % (max_mult + 1));
      rest /= max_mult + 1;
      if (m > 0) c.jumps.push_back({offset, m});
    }
    const Spectrum sp = spectrum(build_second_kind(circulant(n, c.jumps)));
    c.mu1 = sp.largest();
    c.mu_n = sp.smallest();
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace hermspec
