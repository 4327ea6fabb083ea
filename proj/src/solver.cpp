#include "costgames/solver.hpp"

#include <algorithm>
#include <deque>

#include "costgames/interner.hpp"
#include "costgames/semantics.hpp"

namespace cg {

namespace {

int lowest_successor(const CostGame& g, int v) {
  int best = -1;
  for (int k : g.out[v]) {
    int t = g.edges[k].target;
    if (best < 0 || t < best) best = t;
  }
  return best;
}

// Memory elements (o, r) as int32 tuples.
struct MemoryTable {
  int d;
  FlatInterner ids;
  explicit MemoryTable(int d_) : d(d_), ids(1 + d_) {}
  std::vector<std::int32_t> key(int o, const Cost* r) const {
    std::vector<std::int32_t> k(1 + d);
    k[0] = o;
    for (int i = 0; i < d; ++i) k[1 + i] = static_cast<std::int32_t>(r[i]);
    return k;
  }
};

TrackState to_track(const std::int32_t* m, int d) {
  TrackState t;
  t.overflow = m[0];
  t.requests.assign(m + 1, m + 1 + d);
  return t;
}

// Fills the tables of a strategy whose memory is a set of (o, r) elements and
// whose update is `upd` (result outside the set: stay put).
template <class Upd, class Next>
StrategySpec tabulate(const CostGame& g, int player, MemoryTable& mem, Upd upd, Next next) {
  StrategySpec s;
  s.player = player;
  s.num_states = mem.ids.size();
  s.initial = 0;
  s.update.assign(s.num_states, std::vector<int>(g.edges.size()));
  s.next_move.assign(g.n(), std::vector<int>(s.num_states, -1));
  int d = mem.d;
  for (int m = 0; m < s.num_states; ++m) {
    TrackState t = to_track(mem.ids.get(m), d);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      TrackState u = upd(t, static_cast<int>(e));
      int id = mem.ids.find(mem.key(u.overflow, u.requests.data()).data());
      s.update[m][e] = id >= 0 ? id : m;
    }
    for (int v = 0; v < g.n(); ++v)
      if (g.owner(v) == player) s.next_move[v][m] = next(v, t);
  }
  return s;
}

}  // namespace

StrategySpec extract_player0_strategy(const CostGame& g, const QuotientGame& q,
                                      const SolveResult& sol) {
  ColorIndex ci(g);
  int d = ci.d();
  MemoryTable mem(d);
  // product vertices visited by plays consistent with σ'
  std::vector<char> seen(q.pg.n(), 0);
  std::deque<int> bfs{q.pg.initial};
  seen[q.pg.initial] = 1;
  while (!bfs.empty()) {
    int x = bfs.front();
    bfs.pop_front();
    const auto* s = q.states.get(x);
    mem.ids.intern(mem.key(s[1], std::vector<Cost>(s + 2, s + 2 + d).data()).data());
    for (int k = q.pg.off[x]; k < q.pg.off[x + 1]; ++k) {
      int y = q.pg.adj[k];
      if (q.pg.owner[x] == 0 && sol.strategy[x] >= 0 && y != sol.strategy[x]) continue;
      if (!seen[y]) {
        seen[y] = 1;
        bfs.push_back(y);
      }
    }
  }
  auto upd = [&](const TrackState& t, int e) {
    TrackState u = t;
    update_in_place(ci, g.n(), q.b, g.color(g.edges[e].target), g.edges[e].cost, u.overflow,
                    u.requests.data());
    return u;
  };
  auto next = [&](int v, const TrackState& t) {
    int x = q.find(v, t);
    if (x >= 0 && sol.winner[x] == 0 && sol.strategy[x] >= 0) return q.base_vertex(sol.strategy[x]);
    return lowest_successor(g, v);
  };
  return tabulate(g, 0, mem, upd, next);
}

StrategySpec extract_player1_strategy(const CostGame& g, const QuotientGame& q,
                                      const SolveResult& sol) {
  ColorIndex ci(g);
  int d = ci.d();
  int n = g.n();
  // o_v: least overflow with which (v, o, r_v) is visited under τ'
  std::vector<int> ov(n, n);
  std::vector<char> seen(q.pg.n(), 0);
  std::deque<int> bfs{q.pg.initial};
  seen[q.pg.initial] = 1;
  std::vector<RequestFunction> rv(n);
  for (int v = 0; v < n; ++v) rv[v] = initial_request_function(g, v);
  while (!bfs.empty()) {
    int x = bfs.front();
    bfs.pop_front();
    TrackState t = q.track(x);
    int v = q.base_vertex(x);
    if (t.requests == rv[v]) ov[v] = std::min(ov[v], t.overflow);
    for (int k = q.pg.off[x]; k < q.pg.off[x + 1]; ++k) {
      int y = q.pg.adj[k];
      if (q.pg.owner[x] == 1 && sol.strategy[x] >= 0 && y != sol.strategy[x]) continue;
      if (!seen[y]) {
        seen[y] = 1;
        bfs.push_back(y);
      }
    }
  }
  auto upd = [&](const TrackState& t, int e) {
    TrackState u = t;
    int tgt = g.edges[e].target;
    update_in_place(ci, n, q.b, g.color(tgt), g.edges[e].cost, u.overflow, u.requests.data());
    if (u.overflow != t.overflow) u.overflow = ov[tgt];
    return u;
  };
  auto next_raw = [&](int v, const TrackState& t) {
    int x = q.find(v, t);
    if (x >= 0 && sol.winner[x] == 1 && sol.strategy[x] >= 0) return q.base_vertex(sol.strategy[x]);
    return lowest_successor(g, v);
  };
  // memory elements met by plays consistent with the projected strategy
  MemoryTable mem(d);
  FlatInterner pairs(2);
  std::vector<TrackState> elems;
  auto add_elem = [&](const TrackState& t) {
    auto [id, fresh] = mem.ids.intern(mem.key(t.overflow, t.requests.data()).data());
    if (fresh) elems.push_back(t);
    return id;
  };
  std::int32_t key[2] = {g.initial, add_elem({0, rv[g.initial]})};
  pairs.intern(key);
  for (int i = 0; i < pairs.size(); ++i) {
    int v = pairs.get(i)[0];
    TrackState t = elems[pairs.get(i)[1]];
    int fixed = g.owner(v) == 1 ? next_raw(v, t) : -1;
    for (int e : g.out[v]) {
      int tgt = g.edges[e].target;
      if (fixed >= 0 && tgt != fixed) continue;
      key[0] = tgt;
      key[1] = add_elem(upd(t, e));
      pairs.intern(key);
    }
  }
  return tabulate(g, 1, mem, upd, next_raw);
}

Cost regime_cap(const CostGame& g) {
  if (g.encoding == Encoding::Unary) return g.n();
  return static_cast<Cost>(g.n()) * g.max_cost();
}

namespace {

struct Solved {
  QuotientGame q;
  SolveResult sol;
};

Solved solve_at(const CostGame& g, Cost b, std::size_t budget) {
  Solved s{build_quotient_game(g, b, budget), {}};
  s.sol = solve_parity(s.q.pg);
  return s;
}

}  // namespace

BoundedCostResult decide_bounded_cost(const CostGame& g, Cost b, const DecideOptions& opt) {
  require_valid(g);
  if (b < 0) throw Error("usage", "bound must be non-negative");
  BoundedCostResult res;
  const CostGame* eff = &g;
  CostGame abstracted;
  Cost eb = b;
  if (g.encoding == Encoding::Unary && b >= g.n()) {
    eb = g.n();
    res.clamped = b > eb;
  } else if (g.encoding == Encoding::Binary && b >= regime_cap(g)) {
    abstracted = abstract_costs(g);
    eff = &abstracted;
    eb = g.n();
    res.clamped = true;
  }
  res.effective_bound = eb;
  Solved s = solve_at(*eff, eb, opt.budget);
  res.product_size = static_cast<std::size_t>(s.q.pg.n());
  res.achievable = s.sol.winner_from_initial() == 0;
  if (!opt.certificate) return res;
  if (res.achievable) {
    // abstracted edges keep their indices: no parallel edges, same sort order
    res.certificate = extract_player0_strategy(*eff, s.q, s.sol);
    res.certificate_bound = b;
    return res;
  }
  if (res.clamped) {
    try {
      Solved full = solve_at(g, b, std::min<std::size_t>(opt.budget, 200000));
      if (full.sol.winner_from_initial() == 1) {
        res.certificate = extract_player1_strategy(g, full.q, full.sol);
        res.certificate_bound = b;
        return res;
      }
    } catch (const Error& e) {
      if (e.code() != "budget") throw;
    }
  }
  // Player 1 wins the plain game; the certificate proves spoiler cost > eb.
  res.certificate = extract_player1_strategy(*eff, s.q, s.sol);
  res.certificate_bound = eb;
  return res;
}

namespace {

class FdSearch {
 public:
  FdSearch(const CostGame& g, Cost b, std::uint64_t budget)
      : g_(g), b_(b), budget_(budget), ci_(g), binary_(g.encoding == Encoding::Binary) {}

  FdResult run() {
    FdResult res;
    p_.push_back({g_.initial, 0, initial_request_function(g_, g_.initial), 0, false});
    nodes_ = 1;
    try {
      res.outcome = win() ? FdOutcome::Player0 : FdOutcome::Player1;
    } catch (const Exhausted&) {
      res.outcome = FdOutcome::Exhausted;
    }
    res.nodes = nodes_;
    return res;
  }

 private:
  struct Exhausted {};

  // Verdict for the last position given that no proper prefix is settled:
  // 0 Player 0 wins, 1 Player 1 wins, -1 unsettled.
  int verdict() const {
    int e = static_cast<int>(p_.size()) - 1;
    if (p_[e].o >= g_.n()) return 1;
    for (int s = 0; s < e; ++s) {
      auto k = classify_cycle(g_, b_, p_, s, e);
      if (k == CycleKind::Even) return 0;
      if (k == CycleKind::Odd) return 1;
    }
    return -1;
  }

  void push(int edge) {
    if (++nodes_ > budget_ || p_.size() > 200000) throw Exhausted{};
    if (binary_) {
      shortcut_step(g_, b_, p_, edge);
      return;
    }
    const Edge& ed = g_.edges[edge];
    Position nx{ed.target, p_.back().o, p_.back().r, ed.cost, false};
    update_in_place(ci_, g_.n(), b_, g_.color(ed.target), ed.cost, nx.o, nx.r.data());
    p_.push_back(std::move(nx));
  }

  bool win() {
    int v = verdict();
    if (v >= 0) return v == 0;
    int u = p_.back().v;
    bool mine = g_.owner(u) == 0;
    for (int e : g_.out[u]) {
      push(e);
      bool w = win();
      p_.pop_back();
      if (mine && w) return true;
      if (!mine && !w) return false;
    }
    return !mine;
  }

  const CostGame& g_;
  Cost b_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  ColorIndex ci_;
  bool binary_;
  AnnotatedPrefix p_;
};

}  // namespace

FdResult decide_bounded_cost_finite_duration(const CostGame& g, Cost b,
                                             std::uint64_t node_budget) {
  require_valid(g);
  if (b < 0) throw Error("usage", "bound must be non-negative");
  if (node_budget == 0) throw Error("usage", "node budget must be positive");
  return FdSearch(g, b, node_budget).run();
}

OptimalResult optimal_cost(const CostGame& g, const OptimalOptions& opt) {
  require_valid(g);
  OptimalResult res;
  DecideOptions quick{opt.budget, false};
  auto probe = [&](Cost b) {
    bool ok = decide_bounded_cost(g, b, quick).achievable;
    res.probes.push_back({b, ok});
    return ok;
  };
  Cost cap = regime_cap(g);
  if (opt.linear_sweep) {
    res.value = kInf;
    for (Cost b = 0; b <= cap; ++b)
      if (probe(b)) {
        res.value = b;
        break;
      }
  } else {
    res.value = least_bound(cap, probe);
  }
  DecideOptions full{opt.budget, true};
  res.witness = decide_bounded_cost(g, res.value == kInf ? cap : res.value, full);
  return res;
}

}  // namespace cg
