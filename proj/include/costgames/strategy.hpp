#pragma once

#include <string>
#include <vector>

#include "costgames/game.hpp"

namespace cg {

// Mealy-style finite-state strategy. update is indexed [state][edge index of
// the game it was built for]; next_move [vertex][state] holds a successor id
// for vertices owned by `player` and -1 elsewhere.
struct StrategySpec {
  int player = 0;
  int num_states = 1;
  int initial = 0;
  std::vector<std::vector<int>> update;
  std::vector<std::vector<int>> next_move;

  int size() const { return num_states; }
  int step(int state, int edge) const { return update[state][edge]; }
};

// Positional strategy from a successor choice per owned vertex.
StrategySpec positional_strategy(const CostGame& g, int player,
                                 const std::vector<int>& choice);

// Empty string iff the strategy is total and consistent with the arena.
std::string check_strategy(const CostGame& g, const StrategySpec& s);
void require_strategy(const CostGame& g, const StrategySpec& s);

std::string write_strat(const CostGame& g, const StrategySpec& s);
StrategySpec parse_strat(const CostGame& g, const std::string& text);

}  // namespace cg
