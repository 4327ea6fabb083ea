#pragma once

#include <vector>

#include "costgames/game.hpp"

namespace cg {

// Request/answer structure shared by the parity and Streett pipelines:
// pair c is requested at vertices with inQ and answered at vertices with inP,
// edge costs are per pair.
struct PairArena {
  int n = 0;
  int initial = 0;
  int pairs = 0;
  std::vector<int> owner;
  std::vector<std::vector<int>> out;        // edge ids
  std::vector<int> src, tgt;                // per edge
  std::vector<std::vector<Cost>> cost;      // [edge][pair]
  std::vector<std::vector<char>> inQ, inP;  // [vertex][pair]

  // Parity view: pair i is the i-th odd color, answered by even colors >= it.
  static PairArena from_parity(const CostGame& g);
};

// Exact bounded-cost decision for games in which only `mover` has choices,
// via minimal/maximal overflow counts on the overflow-free level graph of the
// request-tracking product. Equivalent to solving that product explicitly.
bool decide_one_player(const PairArena& a, int mover, Cost b, std::size_t budget);

// True iff at most one player ever has a choice; sets `mover` to that player
// (1 if nobody has a choice).
bool is_one_player(const PairArena& a, int& mover);

}  // namespace cg
