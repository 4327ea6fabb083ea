#include "costgames/streett.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>

#include "costgames/parity.hpp"
#include "costgames/reduction.hpp"

namespace cg {

Cost CostStreettGame::max_cost() const {
  Cost w = 0;
  for (const auto& e : edges)
    for (Cost c : e.cost) w = std::max(w, c);
  return w;
}

void CostStreettGame::reindex() {
  std::stable_sort(edges.begin(), edges.end(), [](const StreettEdge& a, const StreettEdge& b) {
    return a.source != b.source ? a.source < b.source : a.target < b.target;
  });
  out.assign(owner.size(), {});
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    int s = edges[i].source;
    if (s >= 0 && s < n()) out[s].push_back(i);
  }
  for (auto& q : Q) std::sort(q.begin(), q.end());
  for (auto& p : P) std::sort(p.begin(), p.end());
}

PairArena CostStreettGame::arena() const {
  PairArena a;
  a.n = n();
  a.initial = initial;
  a.pairs = d;
  a.owner = owner;
  a.out = out;
  a.inQ.assign(n(), std::vector<char>(d, 0));
  a.inP.assign(n(), std::vector<char>(d, 0));
  for (int c = 0; c < d; ++c) {
    for (int v : Q[c]) a.inQ[v][c] = 1;
    for (int v : P[c]) a.inP[v][c] = 1;
  }
  for (const auto& e : edges) {
    a.src.push_back(e.source);
    a.tgt.push_back(e.target);
    a.cost.push_back(e.cost);
  }
  return a;
}

CostGame CostStreettGame::shadow() const {
  std::vector<Vertex> vs;
  for (int v = 0; v < n(); ++v) vs.push_back({v, owner[v], 0});
  std::vector<Edge> es;
  for (const auto& e : edges)
    es.push_back({e.source, e.target, *std::max_element(e.cost.begin(), e.cost.end())});
  return make_game(std::move(vs), std::move(es), initial, Encoding::Binary);
}

std::vector<Violation> validate_streett(const CostStreettGame& g) {
  std::vector<Violation> rep;
  if (g.n() == 0) rep.push_back({"empty arena", "game"});
  if (g.d < 1 || g.d > 30) rep.push_back({"pair count out of range", "game"});
  if (static_cast<int>(g.Q.size()) != g.d || static_cast<int>(g.P.size()) != g.d)
    rep.push_back({"missing pair", "game"});
  for (int v = 0; v < g.n(); ++v)
    if (g.owner[v] != 0 && g.owner[v] != 1)
      rep.push_back({"owner not 0/1", "vertex " + std::to_string(v)});
  std::vector<int> outdeg(g.n(), 0);
  const StreettEdge* prev = nullptr;
  for (const auto& e : g.edges) {
    std::string w = "edge " + std::to_string(e.source) + "->" + std::to_string(e.target);
    if (e.source < 0 || e.source >= g.n() || e.target < 0 || e.target >= g.n()) {
      rep.push_back({"unknown endpoint", w});
      continue;
    }
    ++outdeg[e.source];
    if (prev && prev->source == e.source && prev->target == e.target)
      rep.push_back({"parallel edge", w});
    prev = &e;
    if (static_cast<int>(e.cost.size()) != g.d) rep.push_back({"cost vector size", w});
    for (Cost c : e.cost)
      if (c < 0) rep.push_back({"negative cost", w});
  }
  for (int v = 0; v < g.n(); ++v)
    if (outdeg[v] == 0) rep.push_back({"terminal vertex", "vertex " + std::to_string(v)});
  if (g.initial < 0 || g.initial >= g.n()) rep.push_back({"unknown initial vertex", "game"});
  for (const auto* sets : {&g.Q, &g.P})
    for (std::size_t c = 0; c < sets->size(); ++c)
      for (int v : (*sets)[c])
        if (v < 0 || v >= g.n()) rep.push_back({"unknown pair vertex", "pair " + std::to_string(c)});
  return rep;
}

void require_valid_streett(const CostStreettGame& g) {
  auto rep = validate_streett(g);
  if (!rep.empty()) throw Error("invalid", rep.front().where + ": " + rep.front().rule);
}

namespace {

[[noreturn]] void cst_fail(int line, const std::string& msg) {
  throw Error("parse", "line " + std::to_string(line) + ": " + msg);
}

long long cst_int(const std::string& tok, int line) {
  if (tok.empty() || tok.size() > 18 ||
      !std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
    cst_fail(line, "bad number '" + tok + "'");
  return std::stoll(tok);
}

}  // namespace

// Vertex lines: <id> <owner> <succ>:<c0>|<c1>|...,...   pair lines:
// pair <c> Q: <ids> P: <ids>
CostStreettGame parse_cst(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0, n = 0, count = 0;
  bool header = false;
  CostStreettGame g;
  std::vector<char> seen, pair_seen;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') cst_fail(lineno, "CR line ending");
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    if (!header) {
      if (toks.size() != 4 || toks[0] != "coststreett")
        cst_fail(lineno, "expected 'coststreett <n> <initial> <d>'");
      n = static_cast<int>(cst_int(toks[1], lineno));
      g.initial = static_cast<int>(cst_int(toks[2], lineno));
      g.d = static_cast<int>(cst_int(toks[3], lineno));
      if (n < 1) cst_fail(lineno, "n must be >= 1");
      if (g.d < 1 || g.d > 30) cst_fail(lineno, "d must be in 1..30");
      g.owner.assign(n, 0);
      g.Q.assign(g.d, {});
      g.P.assign(g.d, {});
      seen.assign(n, 0);
      pair_seen.assign(g.d, 0);
      header = true;
      continue;
    }
    if (toks[0] == "pair") {
      if (toks.size() < 4) cst_fail(lineno, "expected 'pair <c> Q: <ids> P: <ids>'");
      int c = static_cast<int>(cst_int(toks[1], lineno));
      if (c >= g.d) cst_fail(lineno, "pair index out of range");
      if (pair_seen[c]) cst_fail(lineno, "duplicate pair " + toks[1]);
      pair_seen[c] = 1;
      if (toks[2] != "Q:") cst_fail(lineno, "expected 'Q:'");
      std::size_t i = 3;
      for (; i < toks.size() && toks[i] != "P:"; ++i) {
        int v = static_cast<int>(cst_int(toks[i], lineno));
        if (v >= n) cst_fail(lineno, "pair vertex out of range");
        g.Q[c].push_back(v);
      }
      if (i == toks.size()) cst_fail(lineno, "expected 'P:'");
      for (++i; i < toks.size(); ++i) {
        int v = static_cast<int>(cst_int(toks[i], lineno));
        if (v >= n) cst_fail(lineno, "pair vertex out of range");
        g.P[c].push_back(v);
      }
      continue;
    }
    if (toks.size() != 3) cst_fail(lineno, "expected '<id> <owner> <succ:cost|...,...>'");
    int id = static_cast<int>(cst_int(toks[0], lineno));
    if (id >= n) cst_fail(lineno, "vertex id out of range");
    if (seen[id]) cst_fail(lineno, "duplicate vertex " + toks[0]);
    seen[id] = 1;
    ++count;
    int own = static_cast<int>(cst_int(toks[1], lineno));
    if (own > 1) cst_fail(lineno, "owner must be 0 or 1");
    g.owner[id] = own;
    std::istringstream es(toks[2]);
    for (std::string item; std::getline(es, item, ',');) {
      auto colon = item.find(':');
      if (colon == std::string::npos) cst_fail(lineno, "expected succ:costs in '" + item + "'");
      StreettEdge e;
      e.source = id;
      e.target = static_cast<int>(cst_int(item.substr(0, colon), lineno));
      if (e.target >= n) cst_fail(lineno, "successor out of range");
      std::istringstream cs(item.substr(colon + 1));
      for (std::string c; std::getline(cs, c, '|');) e.cost.push_back(cst_int(c, lineno));
      if (static_cast<int>(e.cost.size()) != g.d)
        cst_fail(lineno, "expected " + std::to_string(g.d) + " costs per edge");
      g.edges.push_back(std::move(e));
    }
  }
  if (!header) cst_fail(lineno, "missing header");
  if (count != n) cst_fail(lineno, "expected " + std::to_string(n) + " vertex lines");
  for (int c = 0; c < g.d; ++c)
    if (!pair_seen[c]) cst_fail(lineno, "missing pair " + std::to_string(c));
  g.reindex();
  require_valid_streett(g);
  return g;
}

std::string write_cst(const CostStreettGame& g) {
  std::ostringstream os;
  os << "coststreett " << g.n() << " " << g.initial << " " << g.d << "\n";
  for (int v = 0; v < g.n(); ++v) {
    os << v << " " << g.owner[v] << " ";
    for (std::size_t k = 0; k < g.out[v].size(); ++k) {
      const auto& e = g.edges[g.out[v][k]];
      os << (k ? "," : "") << e.target << ":";
      for (int c = 0; c < g.d; ++c) os << (c ? "|" : "") << e.cost[c];
    }
    os << "\n";
  }
  for (int c = 0; c < g.d; ++c) {
    os << "pair " << c << " Q:";
    for (int v : g.Q[c]) os << " " << v;
    os << " P:";
    for (int v : g.P[c]) os << " " << v;
    os << "\n";
  }
  return os.str();
}

CostStreettGame streett_from_parity(const CostGame& g) {
  CostStreettGame s;
  int top = g.max_color();
  s.d = std::max(1, (top + 1) / 2);
  s.initial = g.initial;
  s.Q.assign(s.d, {});
  s.P.assign(s.d, {});
  for (int v = 0; v < g.n(); ++v) {
    s.owner.push_back(g.owner(v));
    int col = g.color(v);
    for (int c = 0; c < s.d; ++c) {
      if (col == 2 * c + 1) s.Q[c].push_back(v);
      if (col % 2 == 0 && col >= 2 * c + 2) s.P[c].push_back(v);
    }
  }
  for (const auto& e : g.edges) s.edges.push_back({e.source, e.target, std::vector<Cost>(s.d, e.cost)});
  s.reindex();
  return s;
}

namespace {

std::vector<int> lasso_word(const CostStreettGame& g, const Lasso& l) {
  check_lasso(g.shadow(), l);
  std::vector<int> w = l.prefix;
  w.insert(w.end(), l.cycle.begin(), l.cycle.end());
  return w;
}

int streett_edge(const CostStreettGame& g, int s, int t) {
  for (int k : g.out[s])
    if (g.edges[k].target == t) return k;
  return -1;
}

}  // namespace

Cost stcor(const CostStreettGame& g, const Lasso& l, int j) {
  auto w = lasso_word(g, l);
  int p = static_cast<int>(l.prefix.size());
  int len = static_cast<int>(w.size());
  if (j < 0 || j >= len) throw Error("range", "position out of canonical range");
  auto next = [&](int i) { return i + 1 < len ? i + 1 : p; };
  auto A = g.arena();
  Cost worst = 0;
  for (int c = 0; c < g.d; ++c) {
    if (!A.inQ[w[j]][c]) continue;
    Cost sum = 0, found = kInf;
    int i = j;
    for (int steps = 0; steps <= 2 * len; ++steps) {
      if (A.inP[w[i]][c]) {
        found = sum;
        break;
      }
      int k = next(i);
      sum += g.edges[streett_edge(g, w[i], w[k])].cost[c];
      i = k;
    }
    worst = std::max(worst, found);
  }
  return worst;
}

Cost streett_play_cost(const CostStreettGame& g, const Lasso& l) {
  lasso_word(g, l);
  int p = static_cast<int>(l.prefix.size());
  Cost best = 0;
  for (int j = p; j < p + static_cast<int>(l.cycle.size()); ++j) best = std::max(best, stcor(g, l, j));
  return best;
}

namespace {

std::vector<std::uint32_t> masks(const std::vector<std::vector<int>>& sets, int n) {
  std::vector<std::uint32_t> m(n, 0);
  for (std::size_t c = 0; c < sets.size(); ++c)
    for (int v : sets[c]) m[v] |= 1u << c;
  return m;
}

// Per-pair request tracking; returns true on overflow.
bool track(const CostStreettGame& g, const std::vector<std::uint32_t>& qm,
           const std::vector<std::uint32_t>& pm, Cost b, int e, int& o, std::int32_t* r) {
  const auto& ed = g.edges[e];
  bool over = false;
  for (int c = 0; c < g.d; ++c)
    if (r[c] != kBot) {
      Cost x = r[c] + ed.cost[c];
      over = over || x > b;
      r[c] = static_cast<std::int32_t>(std::min<Cost>(x, b + 1));
    }
  if (over) {
    for (int c = 0; c < g.d; ++c) r[c] = static_cast<std::int32_t>(kBot);
    o = std::min(o + 1, g.n());
  }
  int t = ed.target;
  for (int c = 0; c < g.d; ++c) {
    if (qm[t] >> c & 1) r[c] = std::max<std::int32_t>(r[c], 0);
    if (pm[t] >> c & 1) r[c] = static_cast<std::int32_t>(kBot);
  }
  return over;
}

std::vector<std::int32_t> initial_requests(const CostStreettGame& g,
                                           const std::vector<std::uint32_t>& qm,
                                           const std::vector<std::uint32_t>& pm, int v) {
  std::vector<std::int32_t> r(g.d);
  for (int c = 0; c < g.d; ++c)
    r[c] = (qm[v] >> c & 1) && !(pm[v] >> c & 1) ? 0 : static_cast<std::int32_t>(kBot);
  return r;
}

}  // namespace

StreettGame plain_streett(const CostStreettGame& g) {
  StreettGame s;
  s.owner = g.owner;
  s.initial = g.initial;
  s.pairs = g.d;
  s.qmask = masks(g.Q, g.n());
  s.pmask = masks(g.P, g.n());
  for (int v = 0; v < g.n(); ++v) {
    for (int e : g.out[v]) s.adj.push_back(g.edges[e].target);
    s.off.push_back(static_cast<int>(s.adj.size()));
  }
  return s;
}

StreettReduction build_streett_reduction(const CostStreettGame& g, Cost b, std::size_t budget) {
  require_valid_streett(g);
  if (b < 0) throw Error("usage", "bound must be non-negative");
  if (b > (1 << 30)) throw Error("budget", "bound too large for an explicit product");
  if (g.d >= 31) throw Error("budget", "too many pairs");
  StreettReduction red;
  red.n = g.n();
  red.d = g.d;
  red.b = b;
  int w = 2 + g.d;
  red.states = FlatInterner(w);
  auto qm = masks(g.Q, g.n()), pm = masks(g.P, g.n());
  std::vector<std::int32_t> key(w), cur(w);
  key[0] = g.initial;
  key[1] = 0;
  auto r0 = initial_requests(g, qm, pm, g.initial);
  std::copy(r0.begin(), r0.end(), key.begin() + 2);
  red.states.intern(key.data());
  auto& sg = red.game;
  sg.pairs = g.d + 1;
  for (int x = 0; x < red.states.size(); ++x) {
    std::copy(red.states.get(x), red.states.get(x) + w, cur.begin());
    int v = cur[0];
    sg.owner.push_back(g.owner[v]);
    sg.qmask.push_back(qm[v] | (cur[1] == g.n() ? 1u << g.d : 0u));
    sg.pmask.push_back(pm[v]);
    for (int e : g.out[v]) {
      key = cur;
      key[0] = g.edges[e].target;
      track(g, qm, pm, b, e, key[1], key.data() + 2);
      auto [id, fresh] = red.states.intern(key.data());
      if (fresh && static_cast<std::size_t>(red.states.size()) > budget)
        throw Error("budget", "Streett reduction exceeds " + std::to_string(budget) +
                                  " vertices (bound " + std::to_string(b) + ")");
      sg.adj.push_back(id);
    }
    sg.off.push_back(static_cast<int>(sg.adj.size()));
  }
  sg.initial = 0;
  return red;
}

int StreettSolution::winner_from_initial() const { return winner[initial]; }

namespace {

// Attractor for `pl` of `target` within `alive`; records the attractor moves.
std::vector<char> attract(const StreettGame& g, const std::vector<char>& alive,
                          const std::vector<char>& target, int pl, std::vector<int>& move) {
  int n = g.n();
  std::vector<std::vector<int>> pred(n);
  std::vector<int> cnt(n, 0);
  for (int v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    for (int k = g.off[v]; k < g.off[v + 1]; ++k) {
      int w = g.adj[k];
      if (!alive[w]) continue;
      pred[w].push_back(v);
      ++cnt[v];
    }
  }
  std::vector<char> in(n, 0);
  std::deque<int> q;
  for (int v = 0; v < n; ++v)
    if (alive[v] && target[v]) {
      in[v] = 1;
      q.push_back(v);
    }
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int p : pred[u]) {
      if (in[p]) continue;
      if (g.owner[p] == pl) {
        in[p] = 1;
        move[p] = u;
        q.push_back(p);
      } else if (--cnt[p] == 0) {
        in[p] = 1;
        q.push_back(p);
      }
    }
  }
  return in;
}

}  // namespace

StreettSolution solve_streett(const StreettGame& g, std::size_t budget) {
  int n = g.n();
  StreettSolution sol;
  sol.winner.assign(n, -1);
  std::vector<char> alive(n, 1);
  std::vector<int> attr_move(n, -1);
  std::vector<int> active(g.pairs);
  std::iota(active.begin(), active.end(), 0);
  // A pair that is never answered and whose requests form a trap is lost for
  // Player 0 from its Player-1 attractor; drop both.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < active.size(); ++i) {
      int c = active[i];
      bool any_p = false, any_q = false, closed = true;
      for (int v = 0; v < n; ++v) {
        if (!alive[v]) continue;
        any_p = any_p || (g.pmask[v] >> c & 1);
        if (g.qmask[v] >> c & 1) {
          any_q = true;
          for (int k = g.off[v]; k < g.off[v + 1]; ++k)
            if (alive[g.adj[k]] && !(g.qmask[g.adj[k]] >> c & 1)) closed = false;
        }
      }
      if (!any_q) {
        active.erase(active.begin() + i);
        changed = true;
        break;
      }
      if (any_p || !closed) continue;
      std::vector<char> target(n, 0);
      for (int v = 0; v < n; ++v) target[v] = alive[v] && (g.qmask[v] >> c & 1);
      auto A = attract(g, alive, target, 1, attr_move);
      for (int v = 0; v < n; ++v)
        if (A[v]) {
          alive[v] = 0;
          sol.winner[v] = 1;
          if (g.owner[v] == 1 && attr_move[v] < 0)
            for (int k = g.off[v]; k < g.off[v + 1]; ++k)
              if (attr_move[v] < 0 || g.adj[k] < attr_move[v]) attr_move[v] = g.adj[k];
        }
      active.erase(active.begin() + i);
      changed = true;
      break;
    }
  }
  sol.active = active;
  int k = static_cast<int>(active.size());
  FlatInterner perm_ids(std::max(1, k));
  auto perm_id = [&](const std::vector<int>& p) {
    std::vector<std::int32_t> key(std::max(1, k), 0);
    std::copy(p.begin(), p.end(), key.begin());
    auto [id, fresh] = perm_ids.intern(key.data());
    if (fresh) sol.perms.push_back(p);
    return id;
  };
  std::vector<int> ident(k);
  std::iota(ident.begin(), ident.end(), 0);  // positions hold indices into `active`
  perm_id(ident);
  sol.index = FlatInterner(2);
  sol.initial = g.initial;
  sol.removed.assign(n, 0);
  for (int v = 0; v < n; ++v) sol.removed[v] = !alive[v];
  sol.attr_move = attr_move;
  if (!alive[g.initial]) return sol;
  std::int32_t key[2] = {g.initial, 0};
  sol.index.intern(key);
  auto& pg = sol.product;
  std::vector<int> succ;
  for (int x = 0; x < sol.index.size(); ++x) {
    int v = sol.index.get(x)[0];
    int pid = sol.index.get(x)[1];
    std::vector<int> p = sol.perms[pid];
    int a = k, q = k;
    for (int i = 0; i < k; ++i) {
      int c = active[p[i]];
      if (a == k && (g.pmask[v] >> c & 1)) a = i;
      if (q == k && (g.qmask[v] >> c & 1)) q = i;
    }
    int prio = 0;
    if (a < k && a <= q) prio = 2 * k - 2 * a;
    else if (q < k) prio = 2 * k - 1 - 2 * q;
    pg.add_vertex(g.owner[v], prio);
    sol.base.push_back(v);
    sol.perm.push_back(pid);
    std::vector<int> np;
    for (int i = 0; i < k; ++i)
      if (!(g.pmask[v] >> active[p[i]] & 1)) np.push_back(p[i]);
    for (int i = 0; i < k; ++i)
      if (g.pmask[v] >> active[p[i]] & 1) np.push_back(p[i]);
    int npid = perm_id(np);
    succ.clear();
    for (int e = g.off[v]; e < g.off[v + 1]; ++e) {
      int w = g.adj[e];
      if (!alive[w]) continue;  // only Player 0 could move there, and loses
      std::int32_t nk[2] = {w, npid};
      auto [id, fresh] = sol.index.intern(nk);
      if (fresh && static_cast<std::size_t>(sol.index.size()) > budget)
        throw Error("budget", "Streett product exceeds " + std::to_string(budget) + " vertices");
      succ.push_back(id);
    }
    pg.close_vertex(succ);
  }
  pg.initial = 0;
  sol.product_solution = solve_parity(pg);
  for (int x = 0; x < pg.n(); ++x)
    if (sol.winner[sol.base[x]] < 0) sol.winner[sol.base[x]] = sol.product_solution.winner[x];
  return sol;
}

Cost streett_clamp_bound(const CostStreettGame& g) {
  __int128 x = static_cast<__int128>(g.n()) * std::max<Cost>(g.max_cost(), 1);
  for (int i = 0; i < g.d && x <= kInf; ++i) x *= 2;
  for (int i = 2; i <= 2 * g.d && x <= kInf; ++i) x *= i;
  return x > kInf ? kInf : static_cast<Cost>(x);
}

Cost streett_practical_cap(const CostStreettGame& g, const StreettOptions& opt) {
  if (opt.cap >= 0) return opt.cap;
  __int128 x = static_cast<__int128>(g.n()) * g.max_cost();
  for (int i = 0; i < g.d && x <= (1 << 30); ++i) x *= 2;
  return static_cast<Cost>(std::min<__int128>(x, 1 << 30));
}

namespace {

// The reduction's product with the index-appearance record, seen from the
// cost game: a memory element is (o, r, permutation id).
class Extraction {
 public:
  Extraction(const CostStreettGame& g, const StreettReduction& red, const StreettSolution& sol)
      : g_(g), red_(red), sol_(sol), perms_(sol.perms) {
    qm_ = masks(g.Q, g.n());
    pm_ = masks(g.P, g.n());
    for (std::size_t i = 0; i < perms_.size(); ++i) pid_[perms_[i]] = static_cast<int>(i);
  }

  int advance(int pid, int x) {
    std::uint32_t pmask = red_.game.pmask[x];
    const auto p = perms_[pid];
    std::vector<int> np;
    for (int i : p)
      if (!(pmask >> sol_.active[i] & 1)) np.push_back(i);
    for (int i : p)
      if (pmask >> sol_.active[i] & 1) np.push_back(i);
    auto it = pid_.find(np);
    if (it != pid_.end()) return it->second;
    perms_.push_back(np);
    return pid_[np] = static_cast<int>(perms_.size()) - 1;
  }

  // Reduction successor chosen by `pl` at (x, pid), -1 if unconstrained.
  int choose(int x, int pid, int pl) const {
    if (red_.game.owner[x] != pl) return -1;
    if (sol_.removed[x]) return pl == 1 ? sol_.attr_move[x] : -1;
    std::int32_t key[2] = {x, pid};
    int y = sol_.index.find(key);
    if (y < 0) return -1;
    const auto& ps = sol_.product_solution;
    if (ps.winner[y] != pl || ps.strategy[y] < 0) return -1;
    return sol_.base[ps.strategy[y]];
  }

  int vertex(int x) const { return red_.states.get(x)[0]; }

  int find_state(int v, int o, const std::int32_t* r) const {
    std::vector<std::int32_t> key(2 + g_.d);
    key[0] = v;
    key[1] = o;
    std::copy(r, r + g_.d, key.begin() + 2);
    return red_.states.find(key.data());
  }

  bool step(int e, int& o, std::int32_t* r) const { return track(g_, qm_, pm_, red_.b, e, o, r); }
  std::vector<std::int32_t> r_init(int v) const { return initial_requests(g_, qm_, pm_, v); }

 private:
  const CostStreettGame& g_;
  const StreettReduction& red_;
  const StreettSolution& sol_;
  std::vector<std::vector<int>> perms_;
  std::map<std::vector<int>, int> pid_;
  std::vector<std::uint32_t> qm_, pm_;
};

int lowest_target(const CostStreettGame& g, int v) {
  int best = -1;
  for (int e : g.out[v])
    if (best < 0 || g.edges[e].target < best) best = g.edges[e].target;
  return best;
}

StrategySpec extract_streett(const CostStreettGame& g, const StreettReduction& red,
                             const StreettSolution& sol, int player) {
  Extraction ex(g, red, sol);
  int d = g.d;
  int w = 2 + d;  // element: o, r..., pid
  // extended product states (x, pid) met under the winner's strategy
  FlatInterner reach(2);
  std::int32_t rk[2] = {0, 0};
  reach.intern(rk);
  for (int i = 0; i < reach.size(); ++i) {
    int x = reach.get(i)[0], pid = reach.get(i)[1];
    int fixed = ex.choose(x, pid, player);
    int np = ex.advance(pid, x);
    for (int k = red.game.off[x]; k < red.game.off[x + 1]; ++k) {
      int y = red.game.adj[k];
      if (fixed >= 0 && y != fixed) continue;
      rk[0] = y;
      rk[1] = np;
      reach.intern(rk);
    }
  }
  // Player 1 resets the counter to the least value seen with fresh requests
  std::vector<int> reset_o(g.n(), g.n()), reset_pid(g.n(), 0);
  if (player == 1)
    for (int i = 0; i < reach.size(); ++i) {
      int x = reach.get(i)[0];
      const auto* s = red.states.get(x);
      int v = s[0];
      if (!std::equal(s + 2, s + 2 + d, ex.r_init(v).begin())) continue;
      if (s[1] < reset_o[v]) {
        reset_o[v] = s[1];
        reset_pid[v] = reach.get(i)[1];
      }
    }
  auto upd = [&](const std::int32_t* m, int e, std::int32_t* out) {
    int v = g.edges[e].source, t = g.edges[e].target;
    int o = m[0];
    std::copy(m, m + w, out);
    int x = ex.find_state(v, o, m + 1);
    int pid = m[1 + d];
    bool over = ex.step(e, o, out + 1);
    out[0] = o;
    out[1 + d] = x >= 0 ? ex.advance(pid, x) : pid;
    if (player == 1 && over) {
      out[0] = reset_o[t];
      out[1 + d] = reset_pid[t];
    }
  };
  auto next = [&](int v, const std::int32_t* m) {
    int x = ex.find_state(v, m[0], m + 1);
    int y = x >= 0 ? ex.choose(x, m[1 + d], player) : -1;
    return y >= 0 ? ex.vertex(y) : lowest_target(g, v);
  };
  FlatInterner mem(w);
  std::vector<std::int32_t> m0(w);
  {
    auto r0 = ex.r_init(g.initial);
    m0[0] = 0;
    std::copy(r0.begin(), r0.end(), m0.begin() + 1);
    m0[1 + d] = 0;
  }
  mem.intern(m0.data());
  std::vector<std::int32_t> buf(w), cur(w);
  if (player == 0) {
    // memory elements of reachable product states
    for (int i = 0; i < reach.size(); ++i) {
      const auto* s = red.states.get(reach.get(i)[0]);
      std::copy(s + 1, s + 2 + d, buf.begin());
      buf[1 + d] = reach.get(i)[1];
      mem.intern(buf.data());
    }
  } else {
    FlatInterner pairs(2);
    std::int32_t pk[2] = {g.initial, 0};
    pairs.intern(pk);
    for (int i = 0; i < pairs.size(); ++i) {
      int v = pairs.get(i)[0];
      std::copy(mem.get(pairs.get(i)[1]), mem.get(pairs.get(i)[1]) + w, cur.begin());
      int fixed = g.owner[v] == 1 ? next(v, cur.data()) : -1;
      for (int e : g.out[v]) {
        if (fixed >= 0 && g.edges[e].target != fixed) continue;
        upd(cur.data(), e, buf.data());
        pk[0] = g.edges[e].target;
        pk[1] = mem.intern(buf.data()).first;
        pairs.intern(pk);
      }
    }
  }
  StrategySpec s;
  s.player = player;
  s.num_states = mem.size();
  s.initial = 0;
  s.update.assign(s.num_states, std::vector<int>(g.edges.size()));
  s.next_move.assign(g.n(), std::vector<int>(s.num_states, -1));
  for (int m = 0; m < s.num_states; ++m) {
    std::copy(mem.get(m), mem.get(m) + w, cur.begin());
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
      upd(cur.data(), static_cast<int>(e), buf.data());
      int id = mem.find(buf.data());
      s.update[m][e] = id >= 0 ? id : m;
    }
    for (int v = 0; v < g.n(); ++v)
      if (g.owner[v] == player) s.next_move[v][m] = next(v, cur.data());
  }
  return s;
}

}  // namespace

StreettDecision decide_bounded_cost_streett(const CostStreettGame& g, Cost b,
                                            const StreettOptions& opt) {
  require_valid_streett(g);
  if (b < 0) throw Error("usage", "bound must be non-negative");
  StreettDecision res;
  if (b >= streett_clamp_bound(g)) {
    res.clamped = true;
    res.achievable = solve_streett(plain_streett(g), opt.budget).winner_from_initial() == 0;
    if (!opt.certificate) return res;
    Cost bp = std::min(b, streett_practical_cap(g, opt));
    try {
      auto sub = decide_bounded_cost_streett(g, bp, opt);
      if (sub.achievable == res.achievable) {
        res.certificate = sub.certificate;
        res.certificate_bound = res.achievable ? b : sub.certificate_bound;
      }
    } catch (const Error& e) {
      if (e.code() != "budget") throw;
    }
    return res;
  }
  auto red = build_streett_reduction(g, b, opt.budget);
  auto sol = solve_streett(red.game, opt.budget);
  res.product_size = static_cast<std::size_t>(red.game.n());
  res.achievable = sol.winner_from_initial() == 0;
  if (opt.certificate) {
    res.certificate = extract_streett(g, red, sol, res.achievable ? 0 : 1);
    res.certificate_bound = b;
  }
  return res;
}

StreettOptimal optimal_cost_streett(const CostStreettGame& g, const StreettOptions& opt) {
  require_valid_streett(g);
  StreettOptimal res;
  Cost cap = streett_practical_cap(g, opt);
  StreettOptions quick = opt;
  quick.certificate = false;
  auto ok = [&](Cost b) {
    bool a = decide_bounded_cost_streett(g, b, quick).achievable;
    res.probes.push_back({b, a});
    return a;
  };
  if (solve_streett(plain_streett(g), opt.budget).winner_from_initial() != 0) {
    res.value = kInf;
    res.witness = decide_bounded_cost_streett(g, cap, opt);
    return res;
  }
  Cost lo = 0, hi = -1;
  for (Cost b = 0;; b = b == 0 ? 1 : 2 * b) {
    Cost probe = std::min(b, cap);
    if (ok(probe)) {
      hi = probe;
      break;
    }
    lo = probe + 1;
    if (probe == cap) break;
  }
  if (hi < 0) {
    res.cap_hit = true;
    res.value = cap + 1;
    res.witness = decide_bounded_cost_streett(g, cap, opt);
    return res;
  }
  while (lo < hi) {
    Cost mid = lo + (hi - lo) / 2;
    if (ok(mid)) hi = mid;
    else lo = mid + 1;
  }
  res.value = hi;
  res.witness = decide_bounded_cost_streett(g, hi, opt);
  return res;
}

Cost streett_strategy_cost(const CostStreettGame& g, const StrategySpec& s) {
  require_valid_streett(g);
  require_strategy(g.shadow(), s);
  return pair_strategy_cost(g.arena(), g.max_cost(), s);
}

bool streett_strategy_within(const CostStreettGame& g, const StrategySpec& s, Cost b) {
  require_valid_streett(g);
  require_strategy(g.shadow(), s);
  return pair_strategy_within(g.arena(), s, b);
}

}  // namespace cg
