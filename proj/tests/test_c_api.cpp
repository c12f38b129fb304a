#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "hermspec/hermspec.h"
#include "json.hpp"

using json = nlohmann::json;

namespace {

struct Handle {
  hs_digraph* g = nullptr;
  ~Handle() { hs_digraph_free(g); }
};

std::string take(char* text) {
  std::string s = text ? text : "";
  hs_string_free(text);
  return s;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(hs_version()) == "1.0.0");
  CHECK(std::string(hs_status_name(HS_OK)) == "ok");
  CHECK(std::string(hs_status_name(HS_ERR_PARSE)) == "parse error");
  hs_string_free(nullptr);
}

TEST_CASE("alpha construction") {
  const hs_alpha w = hs_alpha_omega();
  CHECK(w.a == doctest::Approx(0.5));
  CHECK(w.b == doctest::Approx(std::sqrt(3.0) / 2.0));

  hs_alpha a{};
  CHECK(hs_alpha_parse("i", &a) == HS_OK);
  CHECK(a.a == doctest::Approx(0.0));
  CHECK(a.b == doctest::Approx(1.0));
  CHECK(hs_alpha_make(0.6, 0.8, &a) == HS_OK);
  CHECK(hs_alpha_make(1.0, 1.0, &a) == HS_ERR_INVALID_ARGUMENT);
  CHECK(std::string(hs_last_error()).size() > 0);
  CHECK(hs_alpha_parse("banana", &a) == HS_ERR_PARSE);
  CHECK(hs_alpha_parse(nullptr, &a) == HS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("building and inspecting a digraph") {
  Handle h;
  REQUIRE(hs_digraph_new(3, &h.g) == HS_OK);
  CHECK(hs_digraph_order(h.g) == 3);
  CHECK(hs_digraph_add_arc(h.g, 0, 1, 2) == HS_OK);
  CHECK(hs_digraph_add_edge(h.g, 1, 2, 1) == HS_OK);
  CHECK(hs_digraph_add_loop(h.g, 2, 1) == HS_OK);
  CHECK(hs_digraph_add_arc(h.g, 0, 7, 1) == HS_ERR_INVALID_ARGUMENT);
  CHECK(hs_digraph_add_arc(h.g, 1, 1, 1) == HS_ERR_INVALID_ARGUMENT);

  uint32_t m = 0;
  CHECK(hs_digraph_arc_mult(h.g, 0, 1, &m) == HS_OK);
  CHECK(m == 2);
  CHECK(hs_digraph_arc_mult(h.g, 2, 1, &m) == HS_OK);
  CHECK(m == 1);
  CHECK(hs_digraph_loop_mult(h.g, 2, &m) == HS_OK);
  CHECK(m == 1);

  uint64_t arcs = 0, edges = 0;
  CHECK(hs_digraph_arc_edge_counts(h.g, &arcs, &edges) == HS_OK);
  CHECK(arcs == 2);
  CHECK(edges == 2);

  Handle copy;
  REQUIRE(hs_digraph_clone(h.g, &copy.g) == HS_OK);
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(hs_digraph_serialize(h.g, &a) == HS_OK);
  REQUIRE(hs_digraph_serialize(copy.g, &b) == HS_OK);
  CHECK(take(a) == take(b));

  CHECK(hs_digraph_order(nullptr) == 0);
  CHECK(hs_digraph_add_arc(nullptr, 0, 1, 1) == HS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("edge list round trip and parse errors") {
  const char* text = "# sample\nn 4\nl 3 2\ne 0 1\na 1 2 3\na 3 0\n";
  Handle h;
  REQUIRE(hs_digraph_parse(text, &h.g) == HS_OK);
  char* out = nullptr;
  REQUIRE(hs_digraph_serialize(h.g, &out) == HS_OK);
  const std::string canonical = take(out);

  Handle again;
  REQUIRE(hs_digraph_parse(canonical.c_str(), &again.g) == HS_OK);
  REQUIRE(hs_digraph_serialize(again.g, &out) == HS_OK);
  CHECK(take(out) == canonical);

  char* d1 = nullptr;
  char* d2 = nullptr;
  REQUIRE(hs_digraph_digest(h.g, &d1) == HS_OK);
  REQUIRE(hs_digraph_digest(again.g, &d2) == HS_OK);
  const std::string digest = take(d1);
  CHECK(digest.size() == 16);
  CHECK(digest == take(d2));

  Handle bad;
  CHECK(hs_digraph_parse("n 2\na 0 5\n", &bad.g) == HS_ERR_PARSE);
  CHECK(bad.g == nullptr);
  CHECK(std::string(hs_last_error()).find("line 2") != std::string::npos);
  CHECK(hs_digraph_load("/nonexistent/graph.el", &bad.g) == HS_ERR_PARSE);
}

TEST_CASE("spectrum and characteristic polynomial of the directed triangle") {
  Handle c3;
  REQUIRE(hs_digraph_directed_cycle(3, &c3.g) == HS_OK);
  double values[3];
  REQUIRE(hs_spectrum(c3.g, hs_alpha_omega(), values, 3) == HS_OK);
  CHECK(std::abs(values[0] - 1.0) <= 1e-9);
  CHECK(std::abs(values[1] - 1.0) <= 1e-9);
  CHECK(std::abs(values[2] + 2.0) <= 1e-9);
  CHECK(hs_spectrum(c3.g, hs_alpha_omega(), values, 2) == HS_ERR_BUFFER_TOO_SMALL);

  double coeffs[4];
  REQUIRE(hs_char_poly(c3.g, hs_alpha_omega(), coeffs, 4) == HS_OK);
  const double expected[] = {1.0, 0.0, -3.0, 2.0};
  for (int k = 0; k < 4; ++k) CHECK(std::abs(coeffs[k] - expected[k]) <= 1e-12);
  CHECK(hs_char_poly(c3.g, hs_alpha_omega(), coeffs, 3) == HS_ERR_BUFFER_TOO_SMALL);

  char* out = nullptr;
  REQUIRE(hs_matrix_json(c3.g, hs_alpha_omega(), &out) == HS_OK);
  const json m = json::parse(take(out));
  CHECK(m["n"] == 3);
  CHECK(m["re"][1] == doctest::Approx(0.5));
  CHECK(m["im"][1] == doctest::Approx(std::sqrt(3.0) / 2.0));

  size_t k = 0;
  CHECK(hs_max_independent_set(c3.g, &k) == HS_OK);
  CHECK(k == 1);
}

TEST_CASE("generators") {
  const hs_jump jumps[] = {{1, 1}, {2, 1}};
  Handle z5;
  REQUIRE(hs_digraph_circulant(5, jumps, 2, &z5.g) == HS_OK);
  double values[5];
  REQUIRE(hs_spectrum(z5.g, hs_alpha_omega(), values, 5) == HS_OK);
  CHECK(values[0] == doctest::Approx(2.16535213).epsilon(1e-8));
  CHECK(values[4] == doctest::Approx(-3.16535213).epsilon(1e-8));

  Handle c3, square;
  REQUIRE(hs_digraph_directed_cycle(3, &c3.g) == HS_OK);
  REQUIRE(hs_digraph_product(c3.g, c3.g, &square.g) == HS_OK);
  CHECK(hs_digraph_order(square.g) == 9);

  const size_t keep[] = {0, 2};
  Handle sub;
  REQUIRE(hs_digraph_induced(c3.g, keep, 2, &sub.g) == HS_OK);
  uint32_t m = 0;
  CHECK(hs_digraph_arc_mult(sub.g, 1, 0, &m) == HS_OK);
  CHECK(m == 1);

  Handle r1, r2;
  REQUIRE(hs_digraph_random(8, 0.3, 0.1, 2, 99, &r1.g) == HS_OK);
  REQUIRE(hs_digraph_random(8, 0.3, 0.1, 2, 99, &r2.g) == HS_OK);
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(hs_digraph_serialize(r1.g, &a) == HS_OK);
  REQUIRE(hs_digraph_serialize(r2.g, &b) == HS_OK);
  CHECK(take(a) == take(b));

  Handle bad;
  CHECK(hs_digraph_directed_cycle(1, &bad.g) == HS_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verify report") {
  Handle c3;
  REQUIRE(hs_digraph_directed_cycle(3, &c3.g) == HS_OK);
  char* out = nullptr;
  REQUIRE(hs_verify(c3.g, hs_alpha_omega(), 0.0, &out) == HS_OK);
  const json doc = json::parse(take(out));
  CHECK(doc["schema"] == "hermspec/1");
  CHECK(doc["all_hold"] == true);
  CHECK(doc["checks"]["radius_bound"]["ratio"] == doctest::Approx(0.5));
  CHECK(doc["counterexample"].is_null());
}

TEST_CASE("search entry points") {
  const double target[] = {1, 0, -1};
  char* out = nullptr;
  REQUIRE(hs_search_charpoly(2, target, 3, 0, 1, 0, &out) == HS_OK);
  const json manifest = json::parse(take(out));
  CHECK(manifest["match_count"] == 3);
  CHECK(manifest.find("runtime_ms") == manifest.end());
  CHECK(hs_search_charpoly(2, target, 2, 0, 1, 0, &out) == HS_ERR_INVALID_ARGUMENT);

  const double too_big[] = {1, 0, 0, 0, 0, 0, 0};
  CHECK(hs_search_charpoly(6, too_big, 7, 0, 1, 0, &out) == HS_ERR_BUDGET_EXCEEDED);

  Handle c5;
  REQUIRE(hs_digraph_new(5, &c5.g) == HS_OK);
  for (size_t v = 0; v < 5; ++v) REQUIRE(hs_digraph_add_edge(c5.g, v, (v + 1) % 5, 1) == HS_OK);
  REQUIRE(hs_search_orientation(c5.g, nullptr, 0, 1, 1, &out) == HS_OK);
  const json orient = json::parse(take(out));
  CHECK(orient["bound"] == 2);
  CHECK(orient["exhaustive"] == true);
  CHECK(orient["orientations_examined"] == 243);

  const double targets[] = {2.165, -3.165};
  REQUIRE(hs_search_circulant(5, 1, targets, 1, 5e-4, &out) == HS_OK);
  const json scan = json::parse(take(out));
  CHECK(scan["candidates_scanned"] == 15);
  CHECK(scan["targets"][0]["found"] == true);
}
