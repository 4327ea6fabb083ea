#include "costgames/generators.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace cg {

namespace {

using Mem = std::vector<int>;
using UpdFn = std::function<Mem(const Mem&, int edge)>;
using NxtFn = std::function<int(int v, const Mem&)>;

// Memory states are those met along plays consistent with the strategy;
// updates leaving that set are never used by such plays and stay put.
StrategySpec build_strategy(const std::vector<int>& owner,
                            const std::vector<std::vector<int>>& out,
                            const std::vector<int>& target, int initial, int player,
                            const Mem& init, const UpdFn& upd, const NxtFn& nxt) {
  std::map<Mem, int> ids{{init, 0}};
  std::vector<Mem> states{init};
  std::set<std::pair<int, int>> seen{{initial, 0}};
  std::deque<std::pair<int, int>> q{{initial, 0}};
  while (!q.empty()) {
    auto [v, m] = q.front();
    q.pop_front();
    int fixed = owner[v] == player ? nxt(v, states[m]) : -1;
    for (int e : out[v]) {
      if (fixed >= 0 && target[e] != fixed) continue;
      Mem nm = upd(states[m], e);
      auto [it, fresh] = ids.emplace(nm, static_cast<int>(states.size()));
      if (fresh) states.push_back(nm);
      if (seen.insert({target[e], it->second}).second) q.push_back({target[e], it->second});
    }
  }
  StrategySpec s;
  s.player = player;
  s.num_states = static_cast<int>(states.size());
  s.initial = 0;
  s.update.assign(s.num_states, std::vector<int>(target.size()));
  s.next_move.assign(owner.size(), std::vector<int>(s.num_states, -1));
  for (int m = 0; m < s.num_states; ++m) {
    for (std::size_t e = 0; e < target.size(); ++e) {
      auto it = ids.find(upd(states[m], static_cast<int>(e)));
      s.update[m][e] = it == ids.end() ? m : it->second;
    }
    for (std::size_t v = 0; v < owner.size(); ++v)
      if (owner[v] == player) s.next_move[v][m] = nxt(static_cast<int>(v), states[m]);
  }
  return s;
}

StrategySpec build_strategy(const CostGame& g, int player, const Mem& init, const UpdFn& upd,
                            const NxtFn& nxt) {
  std::vector<int> owner, target;
  for (const auto& v : g.vertices) owner.push_back(v.owner);
  for (const auto& e : g.edges) target.push_back(e.target);
  return build_strategy(owner, g.out, target, g.initial, player, init, upd, nxt);
}

struct Builder {
  std::vector<Vertex> vs;
  std::vector<Edge> es;
  int add(int owner, int color) {
    int id = static_cast<int>(vs.size());
    vs.push_back({id, owner, color});
    return id;
  }
  void edge(int s, int t, Cost c = 1) { es.push_back({s, t, c}); }
  CostGame build(int initial, Encoding enc = Encoding::Unary) {
    return make_game(vs, es, initial, enc);
  }
};

}  // namespace

// ---------------------------------------------------------------- QBF

QbfFormula normalize_qbf(const QbfInput& in) {
  std::set<int> quantified;
  for (auto [v, ex] : in.prefix) {
    if (v < 1 || v > in.num_vars) throw Error("invalid", "quantified variable out of range");
    if (!quantified.insert(v).second) throw Error("invalid", "variable quantified twice");
  }
  std::vector<std::pair<int, bool>> order;
  std::set<int> free_vars;
  for (const auto& c : in.clauses) {
    if (c.size() != 3) throw Error("invalid", "clause must have exactly three literals");
    for (int l : c) {
      int v = std::abs(l);
      if (l == 0 || v > in.num_vars) throw Error("invalid", "literal out of range");
      if (!quantified.count(v)) free_vars.insert(v);
    }
  }
  for (int v : free_vars) order.push_back({v, true});
  order.insert(order.end(), in.prefix.begin(), in.prefix.end());
  QbfFormula f;
  std::map<int, int> rename;
  for (auto [v, ex] : order) {
    bool want_gap = f.exists.empty() ? !ex : f.exists.back() == ex;
    if (want_gap) f.exists.push_back(!ex);  // dummy
    f.exists.push_back(ex);
    rename[v] = f.n();
  }
  if (f.exists.empty() || !f.exists.back()) f.exists.push_back(true);
  for (const auto& c : in.clauses) {
    std::array<int, 3> cl;
    for (int i = 0; i < 3; ++i) cl[i] = c[i] > 0 ? rename[c[i]] : -rename[-c[i]];
    f.clauses.push_back(cl);
  }
  return f;
}

bool is_normalized(const QbfFormula& f) {
  if (f.n() < 1 || !f.exists.front() || !f.exists.back()) return false;
  for (int i = 1; i < f.n(); ++i)
    if (f.exists[i] == f.exists[i - 1]) return false;
  for (const auto& c : f.clauses)
    for (int l : c)
      if (l == 0 || std::abs(l) > f.n()) return false;
  return true;
}

QbfInput parse_qdimacs(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  QbfInput q;
  bool header = false;
  std::size_t expected = 0;
  auto fail = [&](const std::string& m) {
    throw Error("parse", "line " + std::to_string(lineno) + ": " + m);
  };
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c") continue;
    if (tok == "p") {
      std::string cnf;
      if (header || !(ls >> cnf >> q.num_vars >> expected) || cnf != "cnf")
        fail("expected 'p cnf <vars> <clauses>'");
      header = true;
      continue;
    }
    if (!header) fail("missing 'p cnf' header");
    std::vector<long long> nums;
    bool quant = tok == "e" || tok == "a";
    if (!quant) nums.push_back(std::stoll(tok));
    for (long long x; ls >> x;) nums.push_back(x);
    if (!ls.eof()) fail("unexpected token");
    if (nums.empty() || nums.back() != 0) fail("line must end with 0");
    nums.pop_back();
    if (quant) {
      for (long long v : nums) {
        if (v <= 0) fail("bad quantified variable");
        q.prefix.push_back({static_cast<int>(v), tok == "e"});
      }
    } else {
      if (nums.size() != 3) fail("clause must have exactly three literals");
      q.clauses.push_back({nums.begin(), nums.end()});
      for (int l : q.clauses.back())
        if (std::abs(l) > q.num_vars) fail("literal out of range");
    }
  }
  if (!header) fail("missing 'p cnf' header");
  if (q.clauses.size() != expected) fail("clause count differs from header");
  return q;
}

namespace {

bool eval_from(const QbfFormula& f, int j, std::vector<char>& val) {
  if (j == f.n()) {
    for (const auto& c : f.clauses) {
      bool sat = false;
      for (int l : c) sat = sat || (l > 0 ? val[l - 1] : !val[-l - 1]);
      if (!sat) return false;
    }
    return true;
  }
  bool any = false, all = true;
  for (int b = 0; b < 2; ++b) {
    val[j] = static_cast<char>(b);
    bool r = eval_from(f, j + 1, val);
    any = any || r;
    all = all && r;
  }
  return f.exists[j] ? any : all;
}

// Vertex roles of the reduction game.
struct QbfLayout {
  std::vector<int> a, neg_req, pos_req;  // per variable (index j-1)
  int psi = -1;
  std::map<int, int> check, answer;      // literal -> check vertex / answering vertex
};

QbfLayout qbf_layout(const QbfFormula& f, Builder& B) {
  int n = f.n();
  QbfLayout L;
  std::vector<int> f0(n), t0(n);
  for (int j = 1; j <= n; ++j) {
    L.a.push_back(B.add(f.exists[j - 1] ? 0 : 1, 0));
    L.neg_req.push_back(B.add(0, 4 * j + 1));
    f0[j - 1] = B.add(0, 0);
    t0[j - 1] = B.add(0, 0);
    L.pos_req.push_back(B.add(0, 4 * j + 3));
  }
  L.psi = B.add(1, 0);
  for (int j = 1; j <= n; ++j) {
    int nx = j < n ? L.a[j] : L.psi;
    B.edge(L.a[j - 1], L.neg_req[j - 1]);
    B.edge(L.neg_req[j - 1], f0[j - 1]);
    B.edge(f0[j - 1], nx);
    B.edge(L.a[j - 1], t0[j - 1]);
    B.edge(t0[j - 1], L.pos_req[j - 1]);
    B.edge(L.pos_req[j - 1], nx);
  }
  std::set<int> lits;
  for (const auto& c : f.clauses) lits.insert(c.begin(), c.end());
  int top = B.add(0, 4 * (n + 1));
  B.edge(top, L.a[0]);
  for (int l : lits) {
    int j = std::abs(l);
    int chk = B.add(0, 4 * j);
    int prev = chk;
    for (int s = 0; s < 3 * j; ++s) {
      int m = B.add(0, 0);
      B.edge(prev, m);
      prev = m;
    }
    int end = B.add(0, l > 0 ? 4 * j : 4 * j + 2);
    B.edge(prev, end);
    int mid = B.add(0, l > 0 ? 4 * j + 4 : 4 * j + 2);
    B.edge(end, mid);
    B.edge(mid, top);
    L.check[l] = chk;
    L.answer[l] = l > 0 ? mid : end;
  }
  for (const auto& c : f.clauses) {
    int ci = B.add(0, 0);
    B.edge(L.psi, ci);
    std::set<int> own(c.begin(), c.end());
    for (int l : own) B.edge(ci, L.check[l]);
  }
  return L;
}

std::vector<int> bfs_dist(const CostGame& g, int from) {
  std::vector<int> dist(g.n(), -1);
  std::deque<int> q{from};
  dist[from] = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    for (int k : g.out[v]) {
      int t = g.edges[k].target;
      if (dist[t] < 0) {
        dist[t] = dist[v] + 1;
        q.push_back(t);
      }
    }
  }
  return dist;
}

}  // namespace

bool eval_qbf(const QbfFormula& f) {
  if (!is_normalized(f)) throw Error("invalid", "formula is not normalized");
  if (f.n() > 24) throw Error("budget", "too many variables for brute force");
  std::vector<char> val(f.n(), 0);
  return eval_from(f, 0, val);
}

GeneratedInstance qbf_to_game(const QbfFormula& f) {
  if (!is_normalized(f)) throw Error("invalid", "formula is not normalized");
  if (f.clauses.empty()) throw Error("invalid", "formula needs at least one clause");
  Builder B;
  qbf_layout(f, B);
  GeneratedInstance inst;
  inst.family = "qbf";
  inst.d = f.n();
  inst.game = B.build(0);
  inst.target_bound = 3 * f.n() + 5;
  auto audit = qbf_distance_audit(f, inst.game);
  if (!audit.empty()) throw Error("internal", "distance audit failed: " + audit);
  return inst;
}

std::string qbf_distance_audit(const QbfFormula& f, const CostGame& g) {
  Builder B;
  QbfLayout L = qbf_layout(f, B);
  if (static_cast<int>(B.vs.size()) != g.n()) return "layout does not match the game";
  int n = f.n();
  for (int j = 1; j <= n; ++j) {
    int dp = bfs_dist(g, L.pos_req[j - 1])[L.psi];
    int dn = bfs_dist(g, L.neg_req[j - 1])[L.psi];
    if (dp != 3 * (n - j) + 1) return "positive request of x" + std::to_string(j) + " is " +
                                      std::to_string(dp) + " steps from the clause choice";
    if (dn != 3 * (n - j) + 2) return "negative request of x" + std::to_string(j) + " is " +
                                      std::to_string(dn) + " steps from the clause choice";
  }
  for (auto [l, chk] : L.check) {
    int j = std::abs(l);
    int da = bfs_dist(g, chk)[L.answer[l]];
    // psi -> clause -> check, then to the literal's answer: 3n+5 in total
    // from the matching request
    int want = l > 0 ? 3 * j + 2 : 3 * j + 1;
    if (da != want) return "answer path of literal " + std::to_string(l) + " has length " +
                           std::to_string(da);
  }
  return "";
}

// ------------------------------------------------- Player-0 memory family

namespace {

struct P0Arena {
  CostGame game;
  int d = 0;
  // id of (gadget, column, row) with gadget 0..2d-1 (first d owned by
  // Player 1), column 1..d, row 0 top / 1 middle / 2 bottom
  int id(int gadget, int col, int row) const { return (gadget * d + (col - 1)) * 3 + row; }
  int gadget_of(int v) const { return v / (3 * d); }
  int col_of(int v) const { return (v / 3) % d + 1; }
  int row_of(int v) const { return v % 3; }
};

P0Arena p0_arena(int d, bool binary) {
  P0Arena A;
  A.d = d;
  Builder B;
  for (int gdt = 0; gdt < 2 * d; ++gdt) {
    int pl = gdt < d ? 1 : 0;
    for (int k = 1; k <= d; ++k) {
      B.add(pl, 0);
      B.add(pl, pl == 1 ? 2 * k - 1 : 2 * k);
      B.add(pl, 0);
    }
  }
  Cost full = Cost{1} << d;
  for (int gdt = 0; gdt < 2 * d; ++gdt) {
    int next = A.id((gdt + 1) % (2 * d), 1, 0);
    for (int k = 1; k <= d; ++k) {
      Cost in = binary ? Cost{1} << (k - 1) : 1;
      Cost out = binary ? full - (Cost{1} << (k - 1)) : 1;
      Cost flat = binary ? 0 : 1;
      if (k < d) {
        B.edge(A.id(gdt, k, 0), A.id(gdt, k + 1, 0), flat);
        B.edge(A.id(gdt, k, 2), A.id(gdt, k + 1, 2), flat);
      } else {
        B.edge(A.id(gdt, k, 2), next, flat);
      }
      B.edge(A.id(gdt, k, 0), A.id(gdt, k, 1), in);
      B.edge(A.id(gdt, k, 1), A.id(gdt, k, 2), out);
    }
  }
  A.game = B.build(0, binary ? Encoding::Binary : Encoding::Unary);
  return A;
}

// σ_j: the memory is the plan c_1 .. c_d of odd colors to answer in the
// Player-0 gadgets; positions from j on are pinned to 2d-1.
StrategySpec p0_sigma(const P0Arena& A, int j) {
  int d = A.d;
  Mem init(d);
  for (int i = 1; i <= d; ++i) init[i - 1] = i < j ? 2 * i - 1 : 2 * d - 1;
  const CostGame& g = A.game;
  UpdFn upd = [&, init](const Mem& m, int e) {
    int t = g.edges[e].target;
    if (t == g.initial) return init;
    if (A.gadget_of(t) >= d || A.row_of(t) != 1) return m;
    int k = A.gadget_of(t) + 1;
    int c = g.color(t);
    if (m[k - 1] >= c) return m;
    Mem r = m;
    r[k - 1] = c;
    for (int i = k + 1; i <= d; ++i) r[i - 1] = std::min(c + 2 * (i - k), 2 * d - 1);
    for (int i = j; i <= d; ++i) r[i - 1] = 2 * d - 1;
    return r;
  };
  NxtFn nxt = [&](int v, const Mem& m) {
    int k = A.gadget_of(v) - d + 1;
    int col = A.col_of(v);
    if (A.row_of(v) != 0) return g.edges[g.out[v][0]].target;
    if (col == (m[k - 1] + 1) / 2 || col == d) return A.id(A.gadget_of(v), col, 1);
    return A.id(A.gadget_of(v), col + 1, 0);
  };
  return build_strategy(g, 0, init, upd, nxt);
}

}  // namespace

GeneratedInstance p0_memory_family(int d) {
  if (d < 1) throw Error("usage", "d must be >= 1");
  P0Arena A = p0_arena(d, false);
  GeneratedInstance inst;
  inst.family = "p0mem";
  inst.d = d;
  inst.target_bound = d * d + 2 * d;
  for (int j = 1; j <= d; ++j) {
    int size = j == 1 ? 1 : j == d ? 1 << (d - 1) : -1;
    inst.strategies.push_back({"sigma" + std::to_string(j), p0_sigma(A, j),
                               static_cast<Cost>(d * d + 3 * d - j), size});
  }
  inst.game = std::move(A.game);
  return inst;
}

GeneratedInstance binary_tradeoff_family(int d) {
  if (d < 1) throw Error("usage", "d must be >= 1");
  if (d > 30) throw Error("usage", "d too large for the cost encoding");
  P0Arena A = p0_arena(d, true);
  GeneratedInstance inst;
  inst.family = "bintrade";
  inst.d = d;
  Cost full = Cost{1} << d;
  inst.target_bound = (d + 1) * full;
  for (int j = 1; j <= d; ++j) {
    int size = j == 1 ? 1 : j == d ? 1 << (d - 1) : -1;
    Cost claimed = (d + 1) * full + (full >> 1) - (Cost{1} << (j - 1));
    inst.strategies.push_back({"sigma" + std::to_string(j), p0_sigma(A, j), claimed, size});
  }
  inst.game = std::move(A.game);
  return inst;
}

// ------------------------------------------------- Player-1 memory family

namespace {

struct P1Ids {
  int vI = -1;
  std::vector<int> A, F, t0, t1, b0;  // per j (index j-1)
};

// Appends the family-d arena to B; returns its distinguished vertices.
P1Ids p1_arena(Builder& B, int d) {
  P1Ids ids;
  ids.vI = B.add(0, 4 * d);
  std::vector<int> top(d), exit(d);
  for (int j = 1; j <= d; ++j) {
    top[j - 1] = B.add(0, 0);
    int a = B.add(0, 4 * j - 3), b = B.add(0, 0), c = B.add(0, 0);
    int dd = B.add(0, 0), e = B.add(0, 0), f = B.add(0, 4 * j - 1);
    exit[j - 1] = B.add(0, 0);
    B.edge(top[j - 1], a);
    B.edge(a, b);
    B.edge(b, c);
    B.edge(c, exit[j - 1]);
    B.edge(top[j - 1], dd);
    B.edge(dd, e);
    B.edge(e, f);
    B.edge(f, exit[j - 1]);
    ids.A.push_back(a);
    ids.F.push_back(f);
  }
  B.edge(ids.vI, top[0]);
  for (int j = 1; j < d; ++j) B.edge(exit[j - 1], top[j]);
  std::vector<int> cj(d);
  for (int j = 1; j <= d; ++j) cj[j - 1] = B.add(0, j == 1 ? 0 : 4 * (j - 1));
  B.edge(exit[d - 1], cj[0]);
  for (int j = 1; j <= d; ++j) {
    int t0 = B.add(1, 0), t1 = B.add(1, 4 * j - 2), t2 = B.add(1, 0), t3 = B.add(1, 0);
    int b0 = B.add(1, 0), b1 = B.add(1, 4 * j - 2), b3 = B.add(1, 4 * j);
    B.edge(cj[j - 1], t0);
    B.edge(t0, t1);
    B.edge(t1, t2);
    B.edge(t2, t3);
    B.edge(t3, b3);
    B.edge(t0, b0);
    B.edge(b0, b1);
    B.edge(b1, b3);
    B.edge(b3, ids.vI);
    ids.t0.push_back(t0);
    ids.t1.push_back(t1);
    ids.b0.push_back(b0);
    if (j < d) {
      // cost-5 step, subdivided; inner vertices share the target's color
      int prev = cj[j - 1];
      for (int s = 0; s < 4; ++s) {
        int m = B.add(0, 4 * j);
        B.edge(prev, m);
        prev = m;
      }
      B.edge(prev, cj[j]);
    }
  }
  return ids;
}

// τ remembers per j which of the two requests 4j-3 / 4j-1 was opened last.
StrategySpec p1_tau(const CostGame& g, const P1Ids& ids, int root_move) {
  int d = static_cast<int>(ids.A.size());
  std::map<int, int> bit_clear, bit_set, branch;
  for (int j = 0; j < d; ++j) {
    bit_clear[ids.A[j]] = j;
    bit_set[ids.F[j]] = j;
    branch[ids.t0[j]] = j;
  }
  UpdFn upd = [&](const Mem& m, int e) {
    int t = g.edges[e].target;
    Mem r = m;
    if (auto it = bit_clear.find(t); it != bit_clear.end()) r[0] &= ~(1 << it->second);
    if (auto it = bit_set.find(t); it != bit_set.end()) r[0] |= 1 << it->second;
    return r;
  };
  NxtFn nxt = [&](int v, const Mem& m) {
    if (v == g.initial && root_move >= 0) return root_move;
    if (auto it = branch.find(v); it != branch.end())
      return (m[0] >> it->second & 1) ? ids.t1[it->second] : ids.b0[it->second];
    int best = -1;
    for (int k : g.out[v]) best = best < 0 ? g.edges[k].target : std::min(best, g.edges[k].target);
    return best;
  };
  return build_strategy(g, 1, Mem{0}, upd, nxt);
}

}  // namespace

GeneratedInstance p1_memory_family(int d) {
  if (d < 1) throw Error("usage", "d must be >= 1");
  if (d > 20) throw Error("usage", "d too large");
  Builder B;
  P1Ids ids = p1_arena(B, d);
  GeneratedInstance inst;
  inst.family = "p1mem";
  inst.d = d;
  inst.game = B.build(ids.vI);
  inst.target_bound = 5 * (d - 1) + 7;
  inst.strategies.push_back({"tau", p1_tau(inst.game, ids, -1), inst.target_bound, 1 << d});
  return inst;
}

GeneratedInstance p1_tradeoff_family(int d) {
  if (d < 1) throw Error("usage", "d must be >= 1");
  if (d > 20) throw Error("usage", "d too large");
  Builder B;
  int root = B.add(1, 0);
  std::vector<P1Ids> parts;
  for (int j = 1; j <= d; ++j) {
    parts.push_back(p1_arena(B, j));
    B.edge(root, parts.back().vI);
  }
  GeneratedInstance inst;
  inst.family = "p1trade";
  inst.d = d;
  inst.game = B.build(root);
  inst.target_bound = 5 * (d - 1) + 7;
  for (int j = 1; j <= d; ++j)
    inst.strategies.push_back({"tau" + std::to_string(j),
                               p1_tau(inst.game, parts[j - 1], parts[j - 1].vI),
                               static_cast<Cost>(5 * (j - 1) + 7), 1 << j});
  return inst;
}

// ------------------------------------------------- Streett counter family

namespace {

struct CounterIds {
  int P = 0, Q = 1, m = 2;
  int pc(int c) const { return 3 + 3 * c; }
  int bar(int c) const { return 4 + 3 * c; }
  int val(int c) const { return 5 + 3 * c; }
};

StrategySpec counter_strategy(const CostStreettGame& g, int d) {
  CounterIds I;
  int all = (1 << (d + 1)) - 1;
  std::vector<int> owner = g.owner, target;
  for (const auto& e : g.edges) target.push_back(e.target);
  UpdFn upd = [&](const Mem& m, int e) {
    int t = target[e];
    int open = m[0];
    if (t == I.Q) open = all;
    else if (t == I.P) open = 0;
    else if (t >= 3) {
      int c = (t - 3) / 3;
      int role = (t - 3) % 3;
      if (role == 0) open &= ~(1 << c);
      else if (role == 1) open &= (1 << (c + 1)) - 1;
      else open |= (1 << c) - 1;
    }
    return Mem{open};
  };
  NxtFn nxt = [&](int v, const Mem& m) {
    if (v == I.m) {
      int c = 0;
      while (c <= d && !(m[0] >> c & 1)) ++c;
      return I.pc(c > d ? 0 : c);
    }
    return target[g.out[v][0]];
  };
  return build_strategy(owner, g.out, target, g.initial, 0, Mem{0}, upd, nxt);
}

}  // namespace

GeneratedStreett streett_counter_family(int d) {
  if (d < 0) throw Error("usage", "d must be >= 0");
  if (d > 12) throw Error("usage", "d too large");
  CounterIds I;
  CostStreettGame g;
  int k = d + 1;
  g.d = k;
  g.owner.assign(3 + 3 * k, 0);
  g.initial = I.P;
  g.Q.assign(k, {});
  g.P.assign(k, {});
  std::vector<Cost> one(k, 1);
  g.edges.push_back({I.P, I.Q, one});
  g.edges.push_back({I.Q, I.m, one});
  for (int c = 0; c < k; ++c) {
    g.owner[I.pc(c)] = 1;
    g.owner[I.bar(c)] = 1;
    g.edges.push_back({I.m, I.pc(c), one});
    g.edges.push_back({I.pc(c), I.bar(c), one});
    g.edges.push_back({I.pc(c), I.val(c), one});
    g.edges.push_back({I.bar(c), I.bar(c), one});
    g.edges.push_back({I.bar(c), I.P, one});
    g.edges.push_back({I.val(c), I.m, one});
  }
  for (int c = 0; c < k; ++c) {
    g.P[c].push_back(I.P);
    g.Q[c].push_back(I.Q);
    g.P[c].push_back(I.pc(c));
    for (int c2 = c + 1; c2 < k; ++c2) {
      g.Q[c].push_back(I.val(c2));
      g.P[c2].push_back(I.bar(c));
    }
  }
  g.reindex();
  require_valid_streett(g);
  GeneratedStreett inst;
  inst.family = "streett";
  inst.d = d;
  inst.target_bound = 3 * ((Cost{1} << d) - 1) + 2;
  inst.strategies.push_back({"counter", counter_strategy(g, d), inst.target_bound, -1});
  inst.game = std::move(g);
  return inst;
}

std::vector<int> streett_counter_rounds(const GeneratedStreett& inst, int rounds) {
  CounterIds I;
  const auto& g = inst.game;
  const auto& s = inst.strategies.at(0).spec;
  std::vector<int> res;
  int v = g.initial, m = s.initial;
  for (int steps = 0; static_cast<int>(res.size()) < rounds && steps < 100 * (rounds + 1); ++steps) {
    int t;
    if (g.owner[v] == 0) {
      t = s.next_move[v][m];
      if (v == I.m) res.push_back((t - 3) / 3);
    } else {
      int c = (v - 3) / 3;
      t = I.val(c);  // spoiler keeps the play going
    }
    int e = -1;
    for (int k : g.out[v])
      if (g.edges[k].target == t) e = k;
    m = s.update[m][e];
    v = t;
  }
  return res;
}

std::string manifest_line(const std::string& family, int d, Cost bound,
                          const std::vector<ReferenceStrategy>& strategies) {
  std::ostringstream os;
  os << "family=" << family << " d=" << d << " bound=" << cost_str(bound) << " strategies=";
  if (strategies.empty()) os << "-";
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    const auto& s = strategies[i];
    os << (i ? "," : "") << s.name << ":cost=" << cost_str(s.claimed_cost)
       << ":size=" << s.spec.num_states;
    if (s.claimed_size >= 0) os << ":claimed_size=" << s.claimed_size;
  }
  return os.str();
}

}  // namespace cg
