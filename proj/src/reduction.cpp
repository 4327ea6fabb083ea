#include "costgames/reduction.hpp"

#include <algorithm>
#include <sstream>

namespace cg {

ColorIndex::ColorIndex(const CostGame& g) : D(g.odd_colors()) {
  index.assign(g.max_color() + 1, -1);
  for (int i = 0; i < d(); ++i) index[D[i]] = i;
}

RequestFunction initial_request_function(const CostGame& g, int v) {
  ColorIndex ci(g);
  RequestFunction r(ci.d(), kBot);
  int c = g.color(v);
  if (c % 2 == 1) r[ci.index[c]] = 0;
  return r;
}

TrackState initial_track_state(const CostGame& g) {
  return {0, initial_request_function(g, g.initial)};
}

void update_in_place(const ColorIndex& ci, int n, Cost b, int target_color, Cost cost, int& o,
                     Cost* r) {
  int d = ci.d();
  bool over = false;
  for (int i = 0; i < d; ++i)
    if (r[i] != kBot) {
      r[i] += cost;
      over = over || r[i] > b;
    }
  if (over) {
    for (int i = 0; i < d; ++i) r[i] = kBot;
    o = std::min(o + 1, n);
  }
  if (target_color % 2 == 0) {
    for (int i = 0; i < d && ci.D[i] <= target_color; ++i) r[i] = kBot;
  } else {
    Cost& x = r[ci.index[target_color]];
    x = std::max<Cost>(x, 0);
  }
}

TrackState update_track_state(const CostGame& g, Cost b, const TrackState& s, Cost cost,
                              int target) {
  ColorIndex ci(g);
  TrackState t = s;
  update_in_place(ci, g.n(), b, g.color(target), cost, t.overflow, t.requests.data());
  return t;
}

std::vector<int> relevant_positions(const RequestFunction& r) {
  std::vector<int> res;
  Cost higher = kBot;
  for (int i = static_cast<int>(r.size()) - 1; i >= 0; --i) {
    if (r[i] != kBot && r[i] > higher) res.push_back(i);
    higher = std::max(higher, r[i]);
  }
  std::reverse(res.begin(), res.end());
  return res;
}

std::vector<int> relevant_requests(const CostGame& g, const RequestFunction& r) {
  ColorIndex ci(g);
  std::vector<int> res;
  for (int i : relevant_positions(r)) res.push_back(ci.D[i]);
  return res;
}

namespace {

bool req_leq(const Cost* a, const Cost* b, int d) {
  // suffix maximum of b decides whether some relevant c' >= c carries enough
  Cost suffix = kBot;
  Cost higher_a = kBot;
  for (int i = d - 1; i >= 0; --i) {
    suffix = std::max(suffix, b[i]);
    if (a[i] != kBot && a[i] > higher_a && suffix < a[i]) return false;
    higher_a = std::max(higher_a, a[i]);
  }
  return true;
}

}  // namespace

bool req_dominated(const RequestFunction& a, const RequestFunction& b) {
  return req_leq(a.data(), b.data(), static_cast<int>(a.size()));
}

bool dominates(const TrackState& a, const TrackState& b) {
  if (a.overflow != b.overflow) return a.overflow < b.overflow;
  return req_dominated(a.requests, b.requests);
}

CycleKind classify_cycle(const CostGame& g, Cost b, const AnnotatedPrefix& p, int k, int k2) {
  (void)b;
  if (k < 0 || k2 >= static_cast<int>(p.size()) || k >= k2)
    throw Error("range", "cycle indices out of range");
  const auto& x = p[k];
  const auto& y = p[k2];
  if (x.v != y.v || x.o != y.o || x.o >= g.n()) return CycleKind::None;
  int mc = 0;
  for (int i = k; i <= k2; ++i) mc = std::max(mc, g.color(p[i].v));
  if (mc % 2 == 0) return req_dominated(y.r, x.r) ? CycleKind::Even : CycleKind::None;
  return req_dominated(x.r, y.r) ? CycleKind::Odd : CycleKind::None;
}

SettleVerdict settled(const CostGame& g, Cost b, const AnnotatedPrefix& p) {
  SettleVerdict res;
  for (int e = 0; e < static_cast<int>(p.size()); ++e) {
    if (p[e].o >= g.n()) {
      res.kind = SettleVerdict::Saturated;
      res.end = e;
      return res;
    }
    for (int s = 0; s < e; ++s) {
      auto k = classify_cycle(g, b, p, s, e);
      if (k == CycleKind::None) continue;
      res.kind = k == CycleKind::Even ? SettleVerdict::EvenCycle : SettleVerdict::OddCycle;
      res.start = s;
      res.end = e;
      for (int i = s + 1; i <= e; ++i) res.shortcut_in_cycle = res.shortcut_in_cycle || p[i].shortcut;
      return res;
    }
  }
  return res;
}

Cost settled_bound(const CostGame& g, Cost b) {
  (void)b;
  __int128 base = 1;
  for (int i = 0; i < 6; ++i) base *= (g.n() + 1);
  __int128 f = 1;
  if (g.encoding == Encoding::Binary) {
    __int128 nw = static_cast<__int128>(g.n()) * g.max_cost();
    int lg = 0;
    while ((static_cast<__int128>(1) << lg) < nw) ++lg;
    f = lg + 1;
  }
  __int128 res = base * f;
  return res > kInf ? kInf : static_cast<Cost>(res);
}

AnnotatedPrefix annotate(const CostGame& g, Cost b, const std::vector<int>& vs) {
  if (vs.empty() || vs.front() != g.initial) throw Error("range", "prefix must start at v_I");
  AnnotatedPrefix p;
  TrackState s = initial_track_state(g);
  p.push_back({vs[0], 0, s.requests, 0, false});
  for (std::size_t i = 1; i < vs.size(); ++i) {
    int e = -1;
    for (int k : g.out[vs[i - 1]])
      if (g.edges[k].target == vs[i]) e = k;
    if (e < 0) throw Error("range", "prefix is not a path");
    s = update_track_state(g, b, s, g.edges[e].cost, vs[i]);
    p.push_back({vs[i], s.overflow, s.requests, g.edges[e].cost, false});
  }
  return p;
}

bool shortcut_step(const CostGame& g, Cost b, AnnotatedPrefix& p, int edge) {
  if (g.encoding != Encoding::Binary) throw Error("usage", "shortcut_step needs a binary game");
  const Edge& e = g.edges[edge];
  const Position& last = p.back();
  if (e.source != last.v) throw Error("usage", "edge does not leave the last vertex");
  ColorIndex ci(g);
  Position nx{e.target, last.o, last.r, e.cost, false};
  update_in_place(ci, g.n(), b, g.color(e.target), e.cost, nx.o, nx.r.data());
  auto rel = relevant_positions(nx.r);
  if (!rel.empty()) {
    Cost top = kBot;
    for (Cost x : nx.r) top = std::max(top, x);
    Cost sum = e.cost;
    for (int j = static_cast<int>(p.size()) - 1; j >= 0; --j) {
      if (relevant_positions(p[j].r) != rel) break;
      if (p[j].v == nx.v && p[j].o == nx.o && sum > 0 && top + sum <= b) {
        Cost t = (b - top) / sum;
        for (Cost& x : nx.r)
          if (x != kBot) x += sum * t;
        nx.cost_in = e.cost + sum * t;
        nx.shortcut = true;
        p.push_back(std::move(nx));
        return true;
      }
      sum += p[j].cost_in;
    }
  }
  p.push_back(std::move(nx));
  return false;
}

TrackState QuotientGame::track(int x) const {
  const auto* s = states.get(x);
  TrackState t;
  t.overflow = s[1];
  t.requests.assign(s + 2, s + 2 + d);
  return t;
}

int QuotientGame::find(int v, const TrackState& s) const {
  std::vector<std::int32_t> key(2 + d);
  key[0] = v;
  key[1] = s.overflow;
  for (int i = 0; i < d; ++i) key[2 + i] = static_cast<std::int32_t>(s.requests[i]);
  return states.find(key.data());
}

QuotientGame build_quotient_game(const CostGame& g, Cost b, std::size_t budget) {
  require_valid(g);
  if (b < 0) throw Error("usage", "bound must be non-negative");
  if (b > (1 << 30)) throw Error("budget", "bound too large for an explicit product");
  ColorIndex ci(g);
  QuotientGame q;
  q.n = g.n();
  q.d = ci.d();
  q.b = b;
  int w = 2 + q.d;
  q.states = FlatInterner(w);
  std::vector<std::int32_t> key(w);
  std::vector<Cost> r(q.d);
  auto init = initial_track_state(g);
  key[0] = g.initial;
  key[1] = 0;
  for (int i = 0; i < q.d; ++i) key[2 + i] = static_cast<std::int32_t>(init.requests[i]);
  q.states.intern(key.data());
  q.pg.initial = 0;
  std::vector<int> succ;
  for (int x = 0; x < q.states.size(); ++x) {
    const auto* s = q.states.get(x);
    int v = s[0];
    int o = s[1];
    for (int i = 0; i < q.d; ++i) r[i] = s[2 + i];
    q.pg.add_vertex(g.owner(v), o < q.n ? g.color(v) : 1);
    succ.clear();
    for (int k : g.out[v]) {
      const Edge& ed = g.edges[k];
      int o2 = o;
      std::vector<Cost> r2 = r;
      update_in_place(ci, q.n, b, g.color(ed.target), ed.cost, o2, r2.data());
      key[0] = ed.target;
      key[1] = o2;
      for (int i = 0; i < q.d; ++i) key[2 + i] = static_cast<std::int32_t>(r2[i]);
      auto [id, fresh] = q.states.intern(key.data());
      if (fresh && static_cast<std::size_t>(q.states.size()) > budget)
        throw Error("budget", "quotient game exceeds " + std::to_string(budget) +
                                  " vertices (bound " + std::to_string(b) + ")");
      succ.push_back(id);
    }
    q.pg.close_vertex(succ);
  }
  return q;
}

std::string export_quotient_cpg(const CostGame& g, const QuotientGame& q) {
  (void)g;
  std::ostringstream os;
  int n = q.pg.n();
  os << "costparity " << n << " " << q.pg.initial << " unary\n";
  for (int x = 0; x < n; ++x) {
    os << x << " " << q.pg.color[x] << " " << q.pg.owner[x] << " ";
    for (int k = q.pg.off[x]; k < q.pg.off[x + 1]; ++k)
      os << (k > q.pg.off[x] ? "," : "") << q.pg.adj[k] << ":0";
    const auto* s = q.states.get(x);
    os << " # v=" << s[0] << " o=" << s[1] << " r=(";
    for (int i = 0; i < q.d; ++i) {
      if (i) os << ",";
      if (s[2 + i] < 0) os << "_";
      else os << s[2 + i];
    }
    os << ")\n";
  }
  return os.str();
}

}  // namespace cg
