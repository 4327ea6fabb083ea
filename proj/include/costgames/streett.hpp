#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "costgames/game.hpp"
#include "costgames/interner.hpp"
#include "costgames/onegraph.hpp"
#include "costgames/parity.hpp"
#include "costgames/semantics.hpp"
#include "costgames/strategy.hpp"

namespace cg {

struct StreettEdge {
  int source = 0;
  int target = 0;
  std::vector<Cost> cost;  // one entry per pair
};

// Streett game with costs: pair c requests at Q[c] and answers at P[c], with
// its own cost function.
struct CostStreettGame {
  std::vector<int> owner;
  std::vector<StreettEdge> edges;  // sorted by (source, target)
  int initial = 0;
  int d = 1;
  std::vector<std::vector<int>> Q, P;  // sorted vertex ids per pair
  std::vector<std::vector<int>> out;

  int n() const { return static_cast<int>(owner.size()); }
  Cost max_cost() const;
  void reindex();
  PairArena arena() const;
  // Same arena as a parity game with costs (colors 0, edge cost = max over
  // pairs); edge indices coincide. Used for strategy I/O.
  CostGame shadow() const;
};

std::vector<Violation> validate_streett(const CostStreettGame& g);
void require_valid_streett(const CostStreettGame& g);

CostStreettGame parse_cst(const std::string& text);
std::string write_cst(const CostStreettGame& g);

// Streett game with costs built from a parity game with costs: pair c is
// (color 2c+1, even colors >= 2c+2) with the shared cost function.
CostStreettGame streett_from_parity(const CostGame& g);

Cost stcor(const CostStreettGame& g, const Lasso& l, int j);
Cost streett_play_cost(const CostStreettGame& g, const Lasso& l);

// Classical Streett game in CSR form; pair masks per vertex (bit c).
struct StreettGame {
  std::vector<int> owner;
  std::vector<int> off{0};
  std::vector<int> adj;
  int initial = 0;
  int pairs = 0;
  std::vector<std::uint32_t> qmask, pmask;
  int n() const { return static_cast<int>(owner.size()); }
};

// The cost game as a classical Streett game (costs dropped).
StreettGame plain_streett(const CostStreettGame& g);

struct StreettReduction {
  StreettGame game;  // pairs 0..d-1 from the cost game, pair d for saturation
  int n = 0;
  int d = 0;
  Cost b = 0;
  FlatInterner states{2};  // (v, o, r_0 .. r_{d-1})
};

StreettReduction build_streett_reduction(const CostStreettGame& g, Cost b,
                                         std::size_t budget = 5000000);

struct StreettSolution {
  std::vector<int> winner;  // per vertex of the Streett game
  // Index-appearance-record product actually solved.
  ParityGame product;
  SolveResult product_solution;
  std::vector<int> base;           // product vertex -> Streett vertex
  std::vector<int> perm;           // product vertex -> permutation id
  std::vector<std::vector<int>> perms;  // permutation id -> order of active pairs
  std::vector<int> active;         // pairs kept after preprocessing
  std::vector<char> removed;       // won by Player 1 during preprocessing
  std::vector<int> attr_move;      // his moves there
  int initial = 0;
  FlatInterner index{2};           // (vertex, perm id) -> product vertex
  int winner_from_initial() const;
};

StreettSolution solve_streett(const StreettGame& g, std::size_t budget = 5000000);

struct StreettDecision {
  bool achievable = false;
  std::optional<StrategySpec> certificate;  // on the shadow arena
  Cost certificate_bound = 0;
  bool clamped = false;
  std::size_t product_size = 0;
};

struct StreettOptions {
  std::size_t budget = 5000000;
  bool certificate = true;
  Cost cap = -1;  // practical search cap; -1 means n * W * 2^d
};

Cost streett_clamp_bound(const CostStreettGame& g);  // nW 2^d (2d)!, saturating
Cost streett_practical_cap(const CostStreettGame& g, const StreettOptions& opt);

StreettDecision decide_bounded_cost_streett(const CostStreettGame& g, Cost b,
                                            const StreettOptions& opt = {});

struct StreettOptimal {
  Cost value = kInf;
  bool cap_hit = false;  // value is only a lower bound
  StreettDecision witness;
  std::vector<std::pair<Cost, bool>> probes;
};

StreettOptimal optimal_cost_streett(const CostStreettGame& g, const StreettOptions& opt = {});

// Strategy costs over the Streett semantics (same one-player technique).
Cost streett_strategy_cost(const CostStreettGame& g, const StrategySpec& s);
bool streett_strategy_within(const CostStreettGame& g, const StrategySpec& s, Cost b);

}  // namespace cg
