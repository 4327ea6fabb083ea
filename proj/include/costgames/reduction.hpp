#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "costgames/game.hpp"
#include "costgames/interner.hpp"
#include "costgames/parity.hpp"

namespace cg {

inline constexpr Cost kBot = -1;  // ⊥

// Requests are indexed by position in the game's odd colors D (ascending).
using RequestFunction = std::vector<Cost>;

struct TrackState {
  int overflow = 0;
  RequestFunction requests;
  bool operator==(const TrackState& o) const {
    return overflow == o.overflow && requests == o.requests;
  }
};

// Per-game lookup shared by the request-tracking operations.
struct ColorIndex {
  std::vector<int> D;        // odd colors, ascending
  std::vector<int> index;    // color -> position in D, -1 if not odd/used
  explicit ColorIndex(const CostGame& g);
  int d() const { return static_cast<int>(D.size()); }
};

RequestFunction initial_request_function(const CostGame& g, int v);
TrackState initial_track_state(const CostGame& g);

// Four-step update along an edge of cost `cost` into `target`.
TrackState update_track_state(const CostGame& g, Cost b, const TrackState& s, Cost cost,
                              int target);
void update_in_place(const ColorIndex& ci, int n, Cost b, int target_color, Cost cost,
                     int& o, Cost* r);

// Relevant requests as odd colors.
std::vector<int> relevant_requests(const CostGame& g, const RequestFunction& r);
std::vector<int> relevant_positions(const RequestFunction& r);

// a ⊑ b on request functions / track states.
bool req_dominated(const RequestFunction& a, const RequestFunction& b);
bool dominates(const TrackState& a, const TrackState& b);

struct Position {
  int v = 0;
  int o = 0;
  RequestFunction r;
  Cost cost_in = 0;  // cost of the transition into this position
  bool shortcut = false;  // that transition was a shortcut
};
using AnnotatedPrefix = std::vector<Position>;

enum class CycleKind { None, Even, Odd };

CycleKind classify_cycle(const CostGame& g, Cost b, const AnnotatedPrefix& p, int k, int k2);

struct SettleVerdict {
  enum Kind { Unsettled, Saturated, EvenCycle, OddCycle } kind = Unsettled;
  int start = -1;
  int end = -1;
  bool shortcut_in_cycle = false;  // a shortcut transition lies inside the cycle
};

SettleVerdict settled(const CostGame& g, Cost b, const AnnotatedPrefix& p);

// (n+1)^6 for unary games, (ceil(log2(nW))+1)(n+1)^6 for binary ones;
// saturates at INT64_MAX.
Cost settled_bound(const CostGame& g, Cost b);

// Annotates a vertex sequence starting at the initial vertex.
AnnotatedPrefix annotate(const CostGame& g, Cost b, const std::vector<int>& vertices);

// Extends a binary-game prefix by one edge, applying a shortcut when the
// criterion holds. Returns true iff a shortcut was taken.
bool shortcut_step(const CostGame& g, Cost b, AnnotatedPrefix& p, int edge);

struct QuotientGame {
  ParityGame pg;
  int n = 0;  // of the base game
  int d = 0;
  Cost b = 0;
  // Product vertex x is the tuple (v, o, r_0 .. r_{d-1}); ⊥ is stored as -1.
  FlatInterner states{2};
  int base_vertex(int x) const { return states.get(x)[0]; }
  int overflow(int x) const { return states.get(x)[1]; }
  TrackState track(int x) const;
  int find(int v, const TrackState& s) const;  // -1 if unreachable
};

inline constexpr std::size_t kDefaultProductBudget = 5000000;

QuotientGame build_quotient_game(const CostGame& g, Cost b,
                                 std::size_t budget = kDefaultProductBudget);

std::string export_quotient_cpg(const CostGame& g, const QuotientGame& q);

}  // namespace cg
