#include "doctest.h"
#include "costgames/generators.hpp"
#include "support.hpp"

using namespace cg;

namespace {

CostGame loop_game(Cost loop) {
  return make_game({{0, 0, 1}, {1, 1, 0}, {2, 0, 2}}, {{0, 1, 1}, {1, 1, loop}, {1, 2, 1}, {2, 0, 1}}, 0);
}

ParityGame random_parity(std::mt19937_64& rng, int n, int colors) {
  ParityGame pg;
  for (int v = 0; v < n; ++v) pg.add_vertex(rng() % 2, rng() % (colors + 1));
  for (int v = 0; v < n; ++v) {
    std::vector<int> succ;
    int k = 1 + rng() % 3;
    for (int i = 0; i < k; ++i) {
      int t = rng() % n;
      if (std::find(succ.begin(), succ.end(), t) == succ.end()) succ.push_back(t);
    }
    pg.close_vertex(succ);
  }
  return pg;
}

// Decision on the quotient game without any clamping.
bool raw_decide(const CostGame& g, Cost b) {
  return solve_parity(build_quotient_game(g, b).pg).winner_from_initial() == 0;
}

}  // namespace

TEST_CASE("solve_parity: one-vertex games") {
  ParityGame even;
  even.add_vertex(0, 0);
  even.close_vertex({0});
  CHECK(solve_parity(even).winner_from_initial() == 0);
  ParityGame odd;
  odd.add_vertex(0, 1);
  odd.close_vertex({0});
  CHECK(solve_parity(odd).winner_from_initial() == 1);
}

TEST_CASE("property: solve_parity matches the first-cycle game") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 300; ++i) {
    auto pg = random_parity(rng, 1 + static_cast<int>(rng() % 6), 3);
    auto sol = solve_parity(pg);
    CHECK(check_parity_solution(pg, sol).empty());
    cgtest::FirstCycle fc(pg, 10000000);
    for (int v = 0; v < pg.n(); ++v) CHECK(sol.winner[v] == fc.winner(v));
  }
}

TEST_CASE("decide: loop game") {
  auto right = loop_game(0);
  CHECK(decide_bounded_cost(right, 2).achievable);
  CHECK_FALSE(decide_bounded_cost(right, 1).achievable);
  auto left = loop_game(1);
  for (Cost b = 0; b <= left.n(); ++b) CHECK_FALSE(decide_bounded_cost(left, b).achievable);
}

TEST_CASE("finite duration: examples") {
  CHECK(decide_bounded_cost_finite_duration(loop_game(0), 2).outcome == FdOutcome::Player0);
  CHECK(decide_bounded_cost_finite_duration(loop_game(0), 1).outcome == FdOutcome::Player1);
  auto trap = make_game({{0, 0, 1}}, {{0, 0, 0}}, 0);
  CHECK(decide_bounded_cost_finite_duration(trap, 0).outcome == FdOutcome::Player1);
  auto tiny = decide_bounded_cost_finite_duration(loop_game(0), 2, 1);
  CHECK(tiny.outcome == FdOutcome::Exhausted);
}

TEST_CASE("optimal_cost examples") {
  CHECK(optimal_cost(loop_game(0)).value == 2);
  CHECK(optimal_cost(loop_game(1)).value == kInf);
  CHECK(optimal_cost(p0_memory_family(2).game).value == 8);
  auto z = make_game({{0, 0, 0}}, {{0, 0, 1}}, 0);
  CHECK(optimal_cost(z).value == 0);
  OptimalOptions lin;
  lin.linear_sweep = true;
  CHECK(optimal_cost(loop_game(0), lin).value == 2);
}

TEST_CASE("extraction examples") {
  auto z = make_game({{0, 0, 0}, {1, 0, 2}}, {{0, 1, 1}, {1, 0, 1}, {0, 0, 0}}, 0);
  auto r = decide_bounded_cost(z, 0);
  REQUIRE(r.achievable);
  CHECK(r.certificate->num_states == 1);
  CHECK(strategy_cost(z, *r.certificate) == 0);
  auto left = loop_game(1);
  auto l = decide_bounded_cost(left, 1);
  REQUIRE_FALSE(l.achievable);
  CHECK(l.certificate->player == 1);
  CHECK(spoiler_cost(left, *l.certificate) >= 2);
  auto right = loop_game(0);
  auto q = build_quotient_game(right, 2);
  auto sol = solve_parity(q.pg);
  auto s = extract_player0_strategy(right, q, sol);
  CHECK(strategy_cost(right, s) <= 2);
  CHECK(s.num_states <= (right.n() + 1) * 4);
}

TEST_CASE("property: oracle triangle on small unary games") {
  std::mt19937_64 rng(32);
  int compared = 0, exhausted = 0;
  for (int i = 0; i < 300; ++i) {
    auto g = cgtest::random_game(rng, {});
    for (Cost b = 0; b <= 1; ++b) {
      bool ex = decide_bounded_cost(g, b).achievable;
      auto q = build_quotient_game(g, b);
      cgtest::FirstCycle fc(q.pg, 20000000);
      CHECK(ex == (fc.winner(0) == 0));
      auto fd = decide_bounded_cost_finite_duration(g, b, 2000000);
      if (fd.outcome == FdOutcome::Exhausted) {
        ++exhausted;
        continue;
      }
      ++compared;
      CHECK(ex == (fd.outcome == FdOutcome::Player0));
    }
  }
  CHECK(compared > 500);
  MESSAGE("finite-duration exhausted on " << exhausted << " of " << compared + exhausted);
}

TEST_CASE("property: finite duration with shortcuts agrees on binary games") {
  std::mt19937_64 rng(33);
  cgtest::RandomSpec s;
  s.max_n = 2;
  s.max_cost = 3;
  s.encoding = Encoding::Binary;
  int compared = 0;
  for (int i = 0; i < 200; ++i) {
    auto g = cgtest::random_game(rng, s);
    for (Cost b = 0; b <= 4; ++b) {
      auto fd = decide_bounded_cost_finite_duration(g, b, 2000000);
      if (fd.outcome == FdOutcome::Exhausted) continue;
      ++compared;
      CHECK(decide_bounded_cost(g, b).achievable == (fd.outcome == FdOutcome::Player0));
    }
  }
  CHECK(compared > 500);
}

TEST_CASE("property: monotonicity, clamp, and certificates") {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 200; ++i) {
    cgtest::RandomSpec s;
    s.max_n = 4;
    auto g = cgtest::random_game(rng, s);
    bool prev = false;
    for (Cost b = 0; b <= g.n(); ++b) {
      auto r = decide_bounded_cost(g, b);
      if (prev) CHECK(r.achievable);
      prev = r.achievable;
      CHECK(r.achievable == raw_decide(g, b));
      CHECK(cgtest::certificate_ok(g, r));
    }
    for (Cost k = 1; k <= 3; ++k) CHECK(raw_decide(g, g.n() + k) == raw_decide(g, g.n()));
  }
}

TEST_CASE("property: binary games decide like their subdivisions") {
  std::mt19937_64 rng(35);
  cgtest::RandomSpec s;
  s.max_cost = 3;
  s.encoding = Encoding::Binary;
  for (int i = 0; i < 150; ++i) {
    auto g = cgtest::random_game(rng, s);
    auto h = subdivide_costs(g);
    for (Cost b = 0; b <= 4; ++b) {
      auto r = decide_bounded_cost(g, b);
      CHECK(r.achievable == decide_bounded_cost(h, b).achievable);
      CHECK(cgtest::certificate_ok(g, r));
    }
    CHECK(optimal_cost(g).value == optimal_cost(h).value);
  }
}

TEST_CASE("property: optimal_cost is within the regime cap and agrees with a sweep") {
  std::mt19937_64 rng(36);
  OptimalOptions lin;
  lin.linear_sweep = true;
  for (int i = 0; i < 200; ++i) {
    cgtest::RandomSpec s;
    s.max_n = 4;
    if (i % 2) {
      s.max_cost = 3;
      s.encoding = Encoding::Binary;
    }
    auto g = cgtest::random_game(rng, s);
    auto r = optimal_cost(g);
    CHECK(r.value == optimal_cost(g, lin).value);
    if (r.value != kInf) {
      CHECK(r.value <= regime_cap(g));
      CHECK(r.witness.certificate->player == 0);
      CHECK(strategy_cost(g, *r.witness.certificate) <= r.value);
    } else {
      CHECK_FALSE(raw_decide(g, 2 * regime_cap(g) + 1));
      CHECK(cgtest::certificate_ok(g, r.witness));
    }
  }
}
