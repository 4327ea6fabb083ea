#include "costgames/onegraph.hpp"

#include <algorithm>
#include <deque>

#include "costgames/interner.hpp"
#include "costgames/reduction.hpp"

namespace cg {

PairArena PairArena::from_parity(const CostGame& g) {
  PairArena a;
  auto D = g.odd_colors();
  a.n = g.n();
  a.initial = g.initial;
  a.pairs = static_cast<int>(D.size());
  a.owner.resize(a.n);
  a.out = g.out;
  a.inQ.assign(a.n, std::vector<char>(a.pairs, 0));
  a.inP.assign(a.n, std::vector<char>(a.pairs, 0));
  for (int v = 0; v < a.n; ++v) {
    a.owner[v] = g.owner(v);
    int c = g.color(v);
    for (int i = 0; i < a.pairs; ++i) {
      a.inQ[v][i] = c == D[i];
      a.inP[v][i] = c % 2 == 0 && c >= D[i];
    }
  }
  for (const auto& e : g.edges) {
    a.src.push_back(e.source);
    a.tgt.push_back(e.target);
    a.cost.emplace_back(a.pairs, e.cost);
  }
  return a;
}

bool is_one_player(const PairArena& a, int& mover) {
  bool has0 = false, has1 = false;
  for (int v = 0; v < a.n; ++v)
    if (a.out[v].size() > 1) (a.owner[v] == 0 ? has0 : has1) = true;
  mover = has0 ? 0 : 1;
  return !(has0 && has1);
}

namespace {

// Request tracking without the overflow counter; edges remember whether they
// overflowed.
struct LevelGraph {
  FlatInterner st{1};
  std::vector<int> off{0};
  std::vector<int> adj;
  std::vector<char> over;
  int size() const { return st.size(); }
};

LevelGraph build_level_graph(const PairArena& a, Cost b, std::size_t budget) {
  if (b > (1 << 30)) throw Error("budget", "bound too large for an explicit product");
  int d = a.pairs;
  LevelGraph L;
  L.st = FlatInterner(1 + d);
  std::vector<std::int32_t> key(1 + d), cur(1 + d);
  key[0] = a.initial;
  for (int c = 0; c < d; ++c)
    key[1 + c] = a.inQ[a.initial][c] && !a.inP[a.initial][c] ? 0 : static_cast<std::int32_t>(kBot);
  L.st.intern(key.data());
  for (int x = 0; x < L.size(); ++x) {
    std::copy(L.st.get(x), L.st.get(x) + 1 + d, cur.begin());
    for (int e : a.out[cur[0]]) {
      int t = a.tgt[e];
      bool ov = false;
      key[0] = t;
      for (int c = 0; c < d; ++c) {
        Cost r = cur[1 + c];
        if (r != kBot) {
          r += a.cost[e][c];
          ov = ov || r > b;
        }
        key[1 + c] = static_cast<std::int32_t>(std::min<Cost>(r, b + 1));
      }
      for (int c = 0; c < d; ++c) {
        if (ov) key[1 + c] = static_cast<std::int32_t>(kBot);
        if (a.inQ[t][c]) key[1 + c] = std::max<std::int32_t>(key[1 + c], 0);
        if (a.inP[t][c]) key[1 + c] = static_cast<std::int32_t>(kBot);
      }
      auto [id, fresh] = L.st.intern(key.data());
      if (fresh && static_cast<std::size_t>(L.size()) > budget)
        throw Error("budget", "tracking product exceeds " + std::to_string(budget) + " states");
      L.adj.push_back(id);
      L.over.push_back(ov);
    }
    L.off.push_back(static_cast<int>(L.adj.size()));
  }
  return L;
}

// Tarjan over alive nodes using edges accepted by `use`. Components are
// numbered in completion order (sinks first). Returns component count.
template <class Use>
int scc(const LevelGraph& L, const std::vector<char>& alive, Use use, std::vector<int>& comp) {
  int n = L.size();
  comp.assign(n, -1);
  std::vector<int> idx(n, -1), low(n, 0), stk, call;
  std::vector<char> on(n, 0);
  std::vector<int> it(n, 0);
  int counter = 0, ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (!alive[s] || idx[s] >= 0) continue;
    call.push_back(s);
    idx[s] = low[s] = counter++;
    stk.push_back(s);
    on[s] = 1;
    it[s] = L.off[s];
    while (!call.empty()) {
      int v = call.back();
      if (it[v] < L.off[v + 1]) {
        int k = it[v]++;
        int w = L.adj[k];
        if (!alive[w] || !use(k)) continue;
        if (idx[w] < 0) {
          idx[w] = low[w] = counter++;
          stk.push_back(w);
          on[w] = 1;
          it[w] = L.off[w];
          call.push_back(w);
        } else if (on[w]) {
          low[v] = std::min(low[v], idx[w]);
        }
        continue;
      }
      call.pop_back();
      if (!call.empty()) low[call.back()] = std::min(low[call.back()], low[v]);
      if (low[v] == idx[v]) {
        int w;
        do {
          w = stk.back();
          stk.pop_back();
          on[w] = 0;
          comp[w] = ncomp;
        } while (w != v);
        ++ncomp;
      }
    }
  }
  return ncomp;
}

std::vector<int> min_overflows(const LevelGraph& L) {
  std::vector<int> dist(L.size(), -1);
  std::deque<std::pair<int, int>> dq;
  dq.push_back({0, 0});
  std::vector<int> best(L.size(), 1 << 30);
  best[0] = 0;
  while (!dq.empty()) {
    auto [x, dx] = dq.front();
    dq.pop_front();
    if (dist[x] >= 0) continue;
    dist[x] = dx;
    for (int k = L.off[x]; k < L.off[x + 1]; ++k) {
      int y = L.adj[k];
      int dy = dx + (L.over[k] ? 1 : 0);
      if (dist[y] >= 0 || dy >= best[y]) continue;
      best[y] = dy;
      if (L.over[k]) dq.push_back({y, dy});
      else dq.push_front({y, dy});
    }
  }
  return dist;
}

}  // namespace

bool decide_one_player(const PairArena& a, int mover, Cost b, std::size_t budget) {
  LevelGraph L = build_level_graph(a, b, budget);
  int N = L.size();
  auto dist = min_overflows(L);
  auto flat = [&](int x) { return L.st.get(x)[0]; };
  auto no_over = [&](int k) { return !L.over[k]; };
  std::vector<int> comp;
  std::vector<char> alive(N);

  if (mover == 0) {
    for (int x = 0; x < N; ++x) alive[x] = dist[x] >= 0 && dist[x] < a.n;
    std::vector<std::vector<char>> work{alive};
    while (!work.empty()) {
      auto S = std::move(work.back());
      work.pop_back();
      int nc = scc(L, S, no_over, comp);
      std::vector<char> nontrivial(nc, 0);
      for (int x = 0; x < N; ++x) {
        if (!S[x]) continue;
        for (int k = L.off[x]; k < L.off[x + 1]; ++k)
          if (!L.over[k] && S[L.adj[k]] && comp[L.adj[k]] == comp[x]) nontrivial[comp[x]] = 1;
      }
      std::vector<std::vector<char>> hasQ(nc, std::vector<char>(a.pairs, 0)),
          hasP(nc, std::vector<char>(a.pairs, 0));
      for (int x = 0; x < N; ++x) {
        if (!S[x] || !nontrivial[comp[x]]) continue;
        int v = flat(x);
        for (int c = 0; c < a.pairs; ++c) {
          hasQ[comp[x]][c] |= a.inQ[v][c];
          hasP[comp[x]][c] |= a.inP[v][c];
        }
      }
      for (int C = 0; C < nc; ++C) {
        if (!nontrivial[C]) continue;
        std::vector<int> bad;
        for (int c = 0; c < a.pairs; ++c)
          if (hasQ[C][c] && !hasP[C][c]) bad.push_back(c);
        if (bad.empty()) return true;
        std::vector<char> sub(N, 0);
        for (int x = 0; x < N; ++x) {
          if (!S[x] || comp[x] != C) continue;
          bool drop = false;
          for (int c : bad) drop = drop || a.inQ[flat(x)][c];
          sub[x] = !drop;
        }
        work.push_back(std::move(sub));
      }
    }
    return false;
  }

  // Player 1 moves: he wins by saturating the counter or by a bad cycle
  // reached before saturation.
  std::fill(alive.begin(), alive.end(), 1);
  int nc = scc(L, alive, [](int) { return true; }, comp);
  std::vector<int> longest(nc, 0);
  for (int x = 0; x < N; ++x)
    for (int k = L.off[x]; k < L.off[x + 1]; ++k)
      if (L.over[k] && comp[L.adj[k]] == comp[x]) return false;
  std::vector<std::vector<int>> members(nc);
  for (int x = 0; x < N; ++x) members[comp[x]].push_back(x);
  for (int C = 0; C < nc; ++C)
    for (int x : members[C])
      for (int k = L.off[x]; k < L.off[x + 1]; ++k) {
        int C2 = comp[L.adj[k]];
        if (C2 != C) longest[C] = std::max(longest[C], longest[C2] + (L.over[k] ? 1 : 0));
      }
  if (longest[comp[0]] >= a.n) return false;
  for (int c = 0; c < a.pairs; ++c) {
    for (int x = 0; x < N; ++x) alive[x] = dist[x] >= 0 && dist[x] < a.n && !a.inP[flat(x)][c];
    int m = scc(L, alive, no_over, comp);
    std::vector<char> nontrivial(m, 0), hasQ(m, 0);
    for (int x = 0; x < N; ++x) {
      if (!alive[x]) continue;
      for (int k = L.off[x]; k < L.off[x + 1]; ++k)
        if (!L.over[k] && alive[L.adj[k]] && comp[L.adj[k]] == comp[x]) nontrivial[comp[x]] = 1;
      if (a.inQ[flat(x)][c]) hasQ[comp[x]] = 1;
    }
    for (int C = 0; C < m; ++C)
      if (nontrivial[C] && hasQ[C]) return false;
  }
  return true;
}

}  // namespace cg
