#include "doctest.h"
#include "support.hpp"

using namespace cg;

namespace {

bool has_rule(const std::vector<Violation>& vs, const std::string& rule) {
  for (const auto& v : vs)
    if (v.rule == rule) return true;
  return false;
}

CostGame loop_game(Cost loop) {
  return make_game({{0, 0, 1}, {1, 1, 0}, {2, 0, 2}}, {{0, 1, 1}, {1, 1, loop}, {1, 2, 1}, {2, 0, 1}}, 0);
}

}  // namespace

TEST_CASE("validate: minimal game is clean") {
  auto g = make_game({{0, 0, 0}}, {{0, 0, 0}}, 0);
  CHECK(validate_game(g).empty());
}

TEST_CASE("validate: terminal vertex") {
  auto g = make_game({{0, 0, 0}, {1, 0, 0}}, {{0, 1, 0}}, 0);
  CHECK(has_rule(validate_game(g), "terminal vertex"));
}

TEST_CASE("validate: non-abstract cost in a unary game") {
  auto g = make_game({{0, 0, 0}}, {{0, 0, 3}}, 0);
  CHECK(has_rule(validate_game(g), "non-abstract cost"));
  g.encoding = Encoding::Binary;
  CHECK(validate_game(g).empty());
}

TEST_CASE("validate: parallel edges, unknown endpoints, bad owner") {
  auto g = make_game({{0, 2, 0}}, {{0, 0, 0}, {0, 0, 1}, {0, 5, 0}}, 0);
  auto vs = validate_game(g);
  CHECK(has_rule(vs, "parallel edge"));
  CHECK(has_rule(vs, "unknown endpoint"));
  CHECK(has_rule(vs, "owner not 0/1"));
}

TEST_CASE("subdivide: cost-1 edges are unchanged") {
  auto g = loop_game(1);
  auto h = subdivide_costs(g);
  CHECK(write_cpg(h) == write_cpg(g));
}

TEST_CASE("subdivide: one cost-3 edge") {
  auto g = make_game({{0, 0, 1}, {1, 1, 2}}, {{0, 1, 3}, {1, 0, 0}}, 0, Encoding::Binary);
  auto h = subdivide_costs(g);
  CHECK(h.n() == 4);
  CHECK(h.edges.size() == 4);  // three path edges and the back edge
  CHECK(h.max_cost() <= 1);
  CHECK(h.encoding == Encoding::Unary);
  CHECK(validate_game(h).empty());
  for (int v = 2; v < 4; ++v) {
    CHECK(h.color(v) == 0);
    CHECK(h.owner(v) == 0);
  }
}

TEST_CASE("subdivide: blow-up is reported") {
  auto g = make_game({{0, 0, 0}}, {{0, 0, 1000}}, 0, Encoding::Binary);
  try {
    subdivide_costs(g, 100);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == "budget");
  }
}

TEST_CASE("subdivide: vertex count and validity on random binary games") {
  std::mt19937_64 rng(7);
  cgtest::RandomSpec s;
  s.max_n = 4;
  s.max_cost = 3;
  s.encoding = Encoding::Binary;
  for (int i = 0; i < 200; ++i) {
    auto g = cgtest::random_game(rng, s);
    auto h = subdivide_costs(g);
    std::size_t want = g.n();
    for (const auto& e : g.edges)
      if (e.cost >= 2) want += e.cost - 1;
    CHECK(static_cast<std::size_t>(h.n()) == want);
    CHECK(validate_game(h).empty());
  }
}

TEST_CASE("dot export") {
  auto one = make_game({{0, 0, 0}}, {{0, 0, 0}}, 0);
  auto d1 = export_dot(one);
  CHECK(d1.find("v0 -> v0") != std::string::npos);
  auto g = loop_game(0);
  auto d = export_dot(g);
  CHECK(d == export_dot(g));
  int nodes = 0, arrows = 0;
  for (std::size_t p = 0; (p = d.find("shape=", p)) != std::string::npos; ++p) ++nodes;
  for (std::size_t p = 0; (p = d.find("->", p)) != std::string::npos; ++p) ++arrows;
  CHECK(nodes == 3);
  CHECK(arrows == 4);
  CHECK(d.find("shape=box") != std::string::npos);
  CHECK(d.find("shape=circle") != std::string::npos);
}

TEST_CASE("cpg round trip and strict parsing") {
  auto g = loop_game(0);
  auto h = parse_cpg(write_cpg(g));
  CHECK(write_cpg(h) == write_cpg(g));
  CHECK_THROWS_AS(parse_cpg("costparity 1 0 unary\n0 0 0 0:0 extra\n"), Error);
  CHECK_THROWS_AS(parse_cpg("costparity 2 0 unary\n0 0 0 0:0\n"), Error);
  CHECK_THROWS_AS(parse_cpg("parity 1 0 unary\n0 0 0 0:0\n"), Error);
  auto c = parse_cpg("costparity 1 0 binary # header\n0 3 1 0:7 # loop\n");
  CHECK(c.color(0) == 3);
  CHECK(c.owner(0) == 1);
  CHECK(c.edges[0].cost == 7);
}

TEST_CASE("strategy file round trip") {
  auto g = loop_game(0);
  auto s = positional_strategy(g, 0, {1, -1, 0});
  auto t = parse_strat(g, write_strat(g, s));
  CHECK(t.player == 0);
  CHECK(t.next_move == s.next_move);
  CHECK(t.update == s.update);
  CHECK(check_strategy(g, s).empty());
}
