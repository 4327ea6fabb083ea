#pragma once

// Helpers and independent oracles shared by the test suites and the
// acceptance binary.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "costgames/game.hpp"
#include "costgames/parity.hpp"
#include "costgames/reduction.hpp"
#include "costgames/semantics.hpp"
#include "costgames/solver.hpp"
#include "costgames/streett.hpp"

namespace cgtest {

using namespace cg;

struct RandomSpec {
  int min_n = 1, max_n = 3;
  int max_color = 4;  // colors 0..4 keep D within {1, 3}
  int max_out = 2;
  Cost max_cost = 1;
  Encoding encoding = Encoding::Unary;
};

inline CostGame random_game(std::mt19937_64& rng, const RandomSpec& s) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  int n = pick(s.min_n, s.max_n);
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v) vs.push_back({v, pick(0, 1), pick(0, s.max_color)});
  for (int v = 0; v < n; ++v) {
    int k = pick(1, s.max_out);
    std::vector<char> used(n, 0);
    for (int i = 0; i < k; ++i) {
      int t = pick(0, n - 1);
      if (used[t]) continue;
      used[t] = 1;
      es.push_back({v, t, std::uniform_int_distribution<Cost>(0, s.max_cost)(rng)});
    }
  }
  return make_game(vs, es, pick(0, n - 1), s.encoding);
}

// Winner of the first-cycle game on a parity game: the play stops at the
// first vertex repetition and the cycle's maximal color decides. Equivalent
// to the parity game by positional determinacy. Throws when the search
// exceeds `budget` nodes.
class FirstCycle {
 public:
  FirstCycle(const ParityGame& pg, std::uint64_t budget) : pg_(pg), pos_(pg.n(), -1), budget_(budget) {}
  int winner(int v) {
    path_.clear();
    return solve(v);
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  int solve(int v) {
    if (++nodes_ > budget_) throw std::runtime_error("first-cycle budget");
    if (pos_[v] >= 0) {
      int mc = 0;
      for (std::size_t i = pos_[v]; i < path_.size(); ++i) mc = std::max(mc, pg_.color[path_[i]]);
      return mc % 2;
    }
    pos_[v] = static_cast<int>(path_.size());
    path_.push_back(v);
    int me = pg_.owner[v];
    int res = 1 - me;
    for (int k = pg_.off[v]; k < pg_.off[v + 1] && res != me; ++k)
      if (solve(pg_.adj[k]) == me) res = me;
    path_.pop_back();
    pos_[v] = -1;
    return res;
  }
  const ParityGame& pg_;
  std::vector<int> pos_, path_;
  std::uint64_t budget_, nodes_ = 0;
};

// Cor by walking the unrolled lasso position by position.
inline Cost unrolled_cor(const CostGame& g, const Lasso& l, int j, int steps) {
  auto at = [&](int i) {
    int p = static_cast<int>(l.prefix.size());
    return i < p ? l.prefix[i] : l.cycle[(i - p) % l.cycle.size()];
  };
  int c = g.color(at(j));
  Cost acc = 0;
  for (int i = j; i < j + steps; ++i) {
    int v = at(i);
    if (i > j) {
      Cost best = -1;
      for (int k : g.out[at(i - 1)])
        if (g.edges[k].target == v && (best < 0 || g.edges[k].cost < best)) best = g.edges[k].cost;
      acc += best;
    }
    if (g.color(v) % 2 == 0 && g.color(v) >= c) return acc;
  }
  return kInf;
}

// limsup of Cor over a long unrolling: the maximum over one late period.
inline Cost unrolled_play_cost(const CostGame& g, const Lasso& l, int steps) {
  int p = static_cast<int>(l.prefix.size());
  int c = static_cast<int>(l.cycle.size());
  int start = p + c * (steps / (2 * c) + 1);
  Cost res = 0;
  for (int j = start; j < start + c; ++j) res = std::max(res, unrolled_cor(g, l, j, steps));
  return res;
}

// Strategy cost through the explicit pipeline: least b at which Player 0
// wins the strategy product, each probe solved by quotient + Zielonka.
inline Cost explicit_strategy_cost(const CostGame& g, const StrategySpec& s) {
  CostGame h = strategy_product(g, s);
  Cost cap = h.n() * std::max<Cost>(1, h.max_cost());
  return least_bound(cap, [&](Cost b) {
    auto q = build_quotient_game(h, b);
    return solve_parity(q.pg).winner_from_initial() == 0;
  });
}

// Certificate check: Player 0 keeps cost within the bound, Player 1 exceeds it.
inline bool certificate_ok(const CostGame& g, const BoundedCostResult& r) {
  if (!r.certificate) return false;
  if (r.achievable) return r.certificate->player == 0 && strategy_cost_at_most(g, *r.certificate, r.certificate_bound);
  return r.certificate->player == 1 && spoiler_cost_exceeds(g, *r.certificate, r.certificate_bound);
}

inline bool certificate_ok(const CostStreettGame& g, const StreettDecision& r) {
  if (!r.certificate) return false;
  if (r.certificate->player != (r.achievable ? 0 : 1)) return false;
  return streett_strategy_within(g, *r.certificate, r.certificate_bound);
}

inline StrategySpec random_strategy(std::mt19937_64& rng, const CostGame& g, int player, int states) {
  auto pick = [&](int hi) { return std::uniform_int_distribution<int>(0, hi - 1)(rng); };
  StrategySpec s;
  s.player = player;
  s.num_states = states;
  s.initial = pick(states);
  s.update.assign(states, std::vector<int>(g.edges.size()));
  s.next_move.assign(g.n(), std::vector<int>(states, -1));
  for (auto& row : s.update)
    for (auto& x : row) x = pick(states);
  for (int v = 0; v < g.n(); ++v)
    if (g.owner(v) == player)
      for (int m = 0; m < states; ++m)
        s.next_move[v][m] = g.edges[g.out[v][pick(static_cast<int>(g.out[v].size()))]].target;
  return s;
}

// Random play from v_I until the first vertex repetition, as a lasso.
inline Lasso random_lasso(std::mt19937_64& rng, const CostGame& g) {
  std::vector<int> walk{g.initial};
  std::vector<int> seen(g.n(), -1);
  seen[g.initial] = 0;
  while (true) {
    int v = walk.back();
    const auto& out = g.out[v];
    int t = g.edges[out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)]].target;
    if (seen[t] >= 0) {
      Lasso l;
      l.prefix.assign(walk.begin(), walk.begin() + seen[t]);
      l.cycle.assign(walk.begin() + seen[t], walk.end());
      return l;
    }
    seen[t] = static_cast<int>(walk.size());
    walk.push_back(t);
  }
}

// Positional strategies of `player`, one successor choice per owned vertex.
inline std::vector<std::vector<int>> all_choices(const CostGame& g, int player) {
  std::vector<std::vector<int>> res{std::vector<int>(g.n(), -1)};
  for (int v = 0; v < g.n(); ++v) {
    if (g.owner(v) != player) continue;
    std::vector<std::vector<int>> next;
    for (const auto& c : res)
      for (int k : g.out[v]) {
        auto d = c;
        d[v] = g.edges[k].target;
        next.push_back(std::move(d));
      }
    res = std::move(next);
  }
  return res;
}

}  // namespace cgtest
