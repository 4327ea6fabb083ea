#include "costgames/parity.hpp"

#include <algorithm>

namespace cg {

namespace {

// Recursive attractor-based solver. Subgames are tracked by a removal mask
// with stack discipline: every call restores what it removed.
class Zielonka {
 public:
  explicit Zielonka(const ParityGame& g) : g_(g) {
    int n = g.n();
    pred_off_.assign(n + 1, 0);
    for (int e : g.adj) ++pred_off_[e + 1];
    for (int v = 0; v < n; ++v) pred_off_[v + 1] += pred_off_[v];
    pred_.resize(g.adj.size());
    std::vector<int> fill(pred_off_.begin(), pred_off_.end() - 1);
    for (int v = 0; v < n; ++v)
      for (int k = g.off[v]; k < g.off[v + 1]; ++k) pred_[fill[g.adj[k]]++] = v;
    removed_.assign(n, 0);
    in_attr_.assign(n, 0);
    rank_.assign(n, 0);
    cnt_.assign(n, 0);
    res_.winner.assign(n, -1);
    res_.strategy.assign(n, -1);
    res_.initial = g.initial;
  }

  SolveResult run() {
    std::vector<int> all(g_.n());
    for (int v = 0; v < g_.n(); ++v) all[v] = v;
    solve(all);
    return std::move(res_);
  }

 private:
  bool alive(int v) const { return !removed_[v]; }

  // Attractor of `target` for `pl` inside the alive subgame `U`. Writes an
  // attractor strategy (lowest-id successor of smaller rank) for pl's vertices.
  std::vector<int> attractor(const std::vector<int>& U, const std::vector<int>& target, int pl) {
    ++stamp_;
    std::vector<int> res;
    res.reserve(target.size());
    for (int v : target) {
      in_attr_[v] = stamp_;
      rank_[v] = 0;
      res.push_back(v);
    }
    for (int v : U) {
      if (g_.owner[v] == pl) continue;
      int c = 0;
      for (int k = g_.off[v]; k < g_.off[v + 1]; ++k) c += alive(g_.adj[k]);
      cnt_[v] = c;
    }
    for (std::size_t h = 0; h < res.size(); ++h) {
      int u = res[h];
      for (int k = pred_off_[u]; k < pred_off_[u + 1]; ++k) {
        int p = pred_[k];
        if (!alive(p) || in_attr_[p] == stamp_) continue;
        if (g_.owner[p] == pl || --cnt_[p] == 0) {
          in_attr_[p] = stamp_;
          rank_[p] = rank_[u] + 1;
          res.push_back(p);
        }
      }
    }
    for (std::size_t h = target.size(); h < res.size(); ++h) {
      int v = res[h];
      if (g_.owner[v] != pl) continue;
      int best = -1;
      for (int k = g_.off[v]; k < g_.off[v + 1]; ++k) {
        int w = g_.adj[k];
        if (alive(w) && in_attr_[w] == stamp_ && rank_[w] < rank_[v] && (best < 0 || w < best))
          best = w;
      }
      res_.strategy[v] = best;
    }
    return res;
  }

  void solve(std::vector<int> U) {
    std::vector<int> dropped;
    while (!U.empty()) {
      int p = -1;
      for (int v : U) p = std::max(p, g_.color[v]);
      int i = p & 1;
      std::vector<int> top;
      for (int v : U)
        if (g_.color[v] == p) top.push_back(v);
      std::vector<int> A = attractor(U, top, i);
      for (int v : A) removed_[v] = 1;
      std::vector<int> U1;
      for (int v : U)
        if (alive(v)) U1.push_back(v);
      solve(U1);
      for (int v : A) removed_[v] = 0;
      std::vector<int> opp;
      for (int v : U1)
        if (res_.winner[v] != i) opp.push_back(v);
      if (opp.empty()) {
        for (int v : U) res_.winner[v] = i;
        for (int v : top) {
          if (g_.owner[v] != i) continue;
          int best = -1;
          for (int k = g_.off[v]; k < g_.off[v + 1]; ++k) {
            int w = g_.adj[k];
            if (alive(w) && (best < 0 || w < best)) best = w;
          }
          res_.strategy[v] = best;
        }
        break;
      }
      std::vector<int> B = attractor(U, opp, 1 - i);
      for (int v : B) {
        res_.winner[v] = 1 - i;
        removed_[v] = 1;
        dropped.push_back(v);
      }
      std::vector<int> rest;
      for (int v : U)
        if (alive(v)) rest.push_back(v);
      U.swap(rest);
    }
    for (int v : dropped) removed_[v] = 0;
  }

  const ParityGame& g_;
  std::vector<int> pred_off_, pred_;
  std::vector<char> removed_;
  std::vector<unsigned> in_attr_;
  unsigned stamp_ = 0;
  std::vector<int> rank_, cnt_;
  SolveResult res_;
};

}  // namespace

SolveResult solve_parity(const ParityGame& pg) { return Zielonka(pg).run(); }

std::string check_parity_solution(const ParityGame& pg, const SolveResult& r) {
  for (int v = 0; v < pg.n(); ++v) {
    int w = r.winner[v];
    if (w != 0 && w != 1) return "vertex without winner";
    bool own = pg.owner[v] == w;
    if (own) {
      int s = r.strategy[v];
      bool ok = false;
      for (int k = pg.off[v]; k < pg.off[v + 1]; ++k) ok = ok || pg.adj[k] == s;
      if (!ok) return "strategy leaves the arena at " + std::to_string(v);
      if (r.winner[s] != w) return "strategy leaves winning region at " + std::to_string(v);
    } else {
      for (int k = pg.off[v]; k < pg.off[v + 1]; ++k)
        if (r.winner[pg.adj[k]] != w) return "opponent escapes region at " + std::to_string(v);
    }
  }
  return "";
}

}  // namespace cg
