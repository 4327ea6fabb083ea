#pragma once

#include <array>
#include <string>
#include <vector>

#include "costgames/game.hpp"
#include "costgames/strategy.hpp"
#include "costgames/streett.hpp"

namespace cg {

struct ReferenceStrategy {
  std::string name;
  StrategySpec spec;
  Cost claimed_cost = 0;
  int claimed_size = -1;  // -1 when no size is claimed
};

struct GeneratedInstance {
  std::string family;
  int d = 0;
  CostGame game;
  Cost target_bound = 0;
  std::vector<ReferenceStrategy> strategies;
};

struct GeneratedStreett {
  std::string family;
  int d = 0;
  CostStreettGame game;
  Cost target_bound = 0;
  std::vector<ReferenceStrategy> strategies;
};

// Literals are DIMACS style: +v or -v for variable v in 1..n.
struct QbfFormula {
  std::vector<char> exists;  // quantifier of variable v at index v-1
  std::vector<std::array<int, 3>> clauses;
  int n() const { return static_cast<int>(exists.size()); }
};

// Quantifier prefix in order plus clauses; variables used but never
// quantified are treated as outermost existential ones.
struct QbfInput {
  int num_vars = 0;
  std::vector<std::pair<int, bool>> prefix;  // (variable, existential)
  std::vector<std::vector<int>> clauses;
};

// Strict alternation with ∃ outermost and innermost, by inserting fresh
// dummy variables; variables are renumbered in prefix order.
QbfFormula normalize_qbf(const QbfInput& in);
bool is_normalized(const QbfFormula& f);
QbfInput parse_qdimacs(const std::string& text);
bool eval_qbf(const QbfFormula& f);

GeneratedInstance qbf_to_game(const QbfFormula& f);
// Checks the step counts the reduction relies on; empty string iff they hold.
std::string qbf_distance_audit(const QbfFormula& f, const CostGame& g);

GeneratedInstance p0_memory_family(int d);
GeneratedInstance p1_memory_family(int d);
GeneratedInstance p1_tradeoff_family(int d);
GeneratedInstance binary_tradeoff_family(int d);
GeneratedStreett streett_counter_family(int d);

// Branch indices chosen at the hub by the counter strategy in the first
// `rounds` visits, against a spoiler who always continues.
std::vector<int> streett_counter_rounds(const GeneratedStreett& inst, int rounds);

std::string manifest_line(const std::string& family, int d, Cost bound,
                          const std::vector<ReferenceStrategy>& strategies);

}  // namespace cg
