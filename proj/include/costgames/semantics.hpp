#pragma once

#include <vector>

#include "costgames/game.hpp"
#include "costgames/onegraph.hpp"
#include "costgames/strategy.hpp"

namespace cg {

// Ultimately periodic play prefix · cycle^ω starting at the initial vertex.
struct Lasso {
  std::vector<int> prefix;
  std::vector<int> cycle;
};

bool answers(int request_color, int candidate);

// Throws "range" if the lasso is not a play of g from v_I.
void check_lasso(const CostGame& g, const Lasso& l);

// Cor at canonical position j in [0, |prefix| + |cycle|).
Cost cor(const CostGame& g, const Lasso& l, int j);
Cost play_cost(const CostGame& g, const Lasso& l);

// Reachable part of arena × memory with the strategy's moves fixed. Vertex k
// of the product corresponds to (vertex[k], state[k]); edge indices of the
// product refer to product edges, base_edge maps them back.
struct Product {
  PairArena arena;
  std::vector<int> vertex, state, base_edge;
};

Product product_arena(const PairArena& a, const StrategySpec& s,
                      std::size_t budget = 5000000);

// The product as a parity game with costs (for the explicit pipeline).
CostGame strategy_product(const CostGame& g, const StrategySpec& s,
                          std::size_t budget = 5000000);

// Least b in [0, cap] satisfying the monotone predicate, kInf if none.
template <class Pred>
Cost least_bound(Cost cap, Pred ok) {
  if (!ok(cap)) return kInf;
  Cost lo = 0, hi = cap;
  while (lo < hi) {
    Cost mid = lo + (hi - lo) / 2;
    if (ok(mid)) hi = mid;
    else lo = mid + 1;
  }
  return lo;
}

// Generic over request/answer pairs; `w` is the largest per-pair edge cost.
Cost pair_strategy_cost(const PairArena& a, Cost w, const StrategySpec& s,
                        std::size_t budget = 5000000);
// Cst(σ) <= b for Player 0 strategies, Cst(τ) > b for Player 1 strategies.
bool pair_strategy_within(const PairArena& a, const StrategySpec& s, Cost b,
                          std::size_t budget = 5000000);

Cost strategy_cost(const CostGame& g, const StrategySpec& s);
Cost spoiler_cost(const CostGame& g, const StrategySpec& s);

// Certificate checks at a single bound.
bool strategy_cost_at_most(const CostGame& g, const StrategySpec& s, Cost b);
bool spoiler_cost_exceeds(const CostGame& g, const StrategySpec& s, Cost b);

}  // namespace cg
