#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "costgames/game.hpp"
#include "costgames/parity.hpp"
#include "costgames/reduction.hpp"
#include "costgames/strategy.hpp"

namespace cg {

struct DecideOptions {
  std::size_t budget = kDefaultProductBudget;
  bool certificate = true;
};

struct BoundedCostResult {
  bool achievable = false;
  // Player 0 strategy with cost <= certificate_bound when achievable, Player 1
  // strategy with spoiler cost > certificate_bound otherwise.
  std::optional<StrategySpec> certificate;
  Cost certificate_bound = 0;
  Cost effective_bound = 0;  // bound actually used after clamping
  bool clamped = false;
  std::size_t product_size = 0;
};

BoundedCostResult decide_bounded_cost(const CostGame& g, Cost b, const DecideOptions& opt = {});

StrategySpec extract_player0_strategy(const CostGame& g, const QuotientGame& q,
                                      const SolveResult& sol);
StrategySpec extract_player1_strategy(const CostGame& g, const QuotientGame& q,
                                      const SolveResult& sol);

enum class FdOutcome { Player0, Player1, Exhausted };

struct FdResult {
  FdOutcome outcome = FdOutcome::Exhausted;
  std::uint64_t nodes = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10000000;

FdResult decide_bounded_cost_finite_duration(const CostGame& g, Cost b,
                                             std::uint64_t node_budget = kDefaultNodeBudget);

struct OptimalOptions {
  std::size_t budget = kDefaultProductBudget;
  bool linear_sweep = false;
};

struct OptimalResult {
  Cost value = kInf;
  BoundedCostResult witness;  // decision at `value`, or at the cap when infinite
  std::vector<std::pair<Cost, bool>> probes;
};

// n for unary games, nW for binary ones.
Cost regime_cap(const CostGame& g);

OptimalResult optimal_cost(const CostGame& g, const OptimalOptions& opt = {});

}  // namespace cg
