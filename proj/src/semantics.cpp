#include "costgames/semantics.hpp"

#include <algorithm>
#include <map>

#include "costgames/interner.hpp"

namespace cg {

bool answers(int request_color, int candidate) {
  return candidate % 2 == 0 && candidate >= request_color;
}

namespace {

int edge_between(const CostGame& g, int s, int t) {
  for (int k : g.out[s])
    if (g.edges[k].target == t) return k;
  return -1;
}

}  // namespace

void check_lasso(const CostGame& g, const Lasso& l) {
  if (l.cycle.empty()) throw Error("range", "lasso cycle is empty");
  std::vector<int> w = l.prefix;
  w.insert(w.end(), l.cycle.begin(), l.cycle.end());
  for (int v : w)
    if (v < 0 || v >= g.n()) throw Error("range", "lasso mentions unknown vertex");
  if (w.front() != g.initial) throw Error("range", "lasso does not start at v_I");
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (edge_between(g, w[i], w[i + 1]) < 0) throw Error("range", "lasso step is not an edge");
  if (edge_between(g, l.cycle.back(), l.cycle.front()) < 0)
    throw Error("range", "lasso cycle does not close");
}

Cost cor(const CostGame& g, const Lasso& l, int j) {
  check_lasso(g, l);
  int p = static_cast<int>(l.prefix.size());
  int len = p + static_cast<int>(l.cycle.size());
  if (j < 0 || j >= len) throw Error("range", "position out of canonical range");
  auto at = [&](int i) { return i < p ? l.prefix[i] : l.cycle[i - p]; };
  auto next = [&](int i) { return i + 1 < len ? i + 1 : p; };
  int c = g.color(at(j));
  Cost sum = 0;
  int i = j;
  // every answer reachable at all appears within len + |cycle| steps
  for (int steps = 0; steps <= 2 * len; ++steps) {
    if (answers(c, g.color(at(i)))) return sum;
    int k = next(i);
    sum += g.edges[edge_between(g, at(i), at(k))].cost;
    i = k;
  }
  return kInf;
}

Cost play_cost(const CostGame& g, const Lasso& l) {
  check_lasso(g, l);
  int p = static_cast<int>(l.prefix.size());
  Cost best = 0;
  for (int j = p; j < p + static_cast<int>(l.cycle.size()); ++j) best = std::max(best, cor(g, l, j));
  return best;
}

Product product_arena(const PairArena& a, const StrategySpec& s, std::size_t budget) {
  if (static_cast<int>(s.next_move.size()) != a.n)
    throw Error("strategy", "strategy does not fit the arena");
  Product P;
  auto& h = P.arena;
  h.pairs = a.pairs;
  FlatInterner ids(2);
  std::int32_t key[2] = {a.initial, s.initial};
  ids.intern(key);
  for (int x = 0; x < ids.size(); ++x) {
    int v = ids.get(x)[0], m = ids.get(x)[1];
    P.vertex.push_back(v);
    P.state.push_back(m);
    h.owner.push_back(a.owner[v]);
    h.inQ.push_back(a.inQ[v]);
    h.inP.push_back(a.inP[v]);
    h.out.emplace_back();
    bool fixed = a.owner[v] == s.player;
    for (int e : a.out[v]) {
      if (fixed && a.tgt[e] != s.next_move[v][m]) continue;
      key[0] = a.tgt[e];
      key[1] = s.update[m][e];
      auto [id, fresh] = ids.intern(key);
      if (fresh && static_cast<std::size_t>(ids.size()) > budget)
        throw Error("budget", "strategy product exceeds " + std::to_string(budget) + " vertices");
      h.out[x].push_back(static_cast<int>(h.src.size()));
      h.src.push_back(x);
      h.tgt.push_back(id);
      h.cost.push_back(a.cost[e]);
      P.base_edge.push_back(e);
    }
    if (h.out[x].empty()) throw Error("strategy", "next move is not a successor");
  }
  h.n = ids.size();
  h.initial = 0;
  return P;
}

CostGame strategy_product(const CostGame& g, const StrategySpec& s, std::size_t budget) {
  require_strategy(g, s);
  Product P = product_arena(PairArena::from_parity(g), s, budget);
  std::vector<Vertex> vs;
  for (int x = 0; x < P.arena.n; ++x) vs.push_back({x, P.arena.owner[x], g.color(P.vertex[x])});
  std::vector<Edge> es;
  for (std::size_t k = 0; k < P.base_edge.size(); ++k)
    es.push_back({P.arena.src[k], P.arena.tgt[k], g.edges[P.base_edge[k]].cost});
  return make_game(std::move(vs), std::move(es), 0, g.encoding);
}

Cost pair_strategy_cost(const PairArena& a, Cost w, const StrategySpec& s, std::size_t budget) {
  Product P = product_arena(a, s, budget);
  Cost cap = static_cast<Cost>(P.arena.n) * w;
  // For both players the cost is the least b at which Player 0 wins the product.
  int mover = 1 - s.player;
  return least_bound(cap, [&](Cost b) { return decide_one_player(P.arena, mover, b, budget); });
}

bool pair_strategy_within(const PairArena& a, const StrategySpec& s, Cost b, std::size_t budget) {
  Product P = product_arena(a, s, budget);
  bool p0 = decide_one_player(P.arena, 1 - s.player, b, budget);
  return s.player == 0 ? p0 : !p0;
}

namespace {

void need_player(const CostGame& g, const StrategySpec& s, int player) {
  require_strategy(g, s);
  if (s.player != player)
    throw Error("strategy", "expected a strategy for Player " + std::to_string(player));
}

}  // namespace

Cost strategy_cost(const CostGame& g, const StrategySpec& s) {
  need_player(g, s, 0);
  return pair_strategy_cost(PairArena::from_parity(g), g.max_cost(), s);
}

Cost spoiler_cost(const CostGame& g, const StrategySpec& s) {
  need_player(g, s, 1);
  return pair_strategy_cost(PairArena::from_parity(g), g.max_cost(), s);
}

bool strategy_cost_at_most(const CostGame& g, const StrategySpec& s, Cost b) {
  need_player(g, s, 0);
  return pair_strategy_within(PairArena::from_parity(g), s, b);
}

bool spoiler_cost_exceeds(const CostGame& g, const StrategySpec& s, Cost b) {
  need_player(g, s, 1);
  return pair_strategy_within(PairArena::from_parity(g), s, b);
}

}  // namespace cg
