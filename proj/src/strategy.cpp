#include "costgames/strategy.hpp"

#include <sstream>

namespace cg {

StrategySpec positional_strategy(const CostGame& g, int player,
                                 const std::vector<int>& choice) {
  StrategySpec s;
  s.player = player;
  s.num_states = 1;
  s.initial = 0;
  s.update.assign(1, std::vector<int>(g.edges.size(), 0));
  s.next_move.assign(g.n(), std::vector<int>(1, -1));
  for (int v = 0; v < g.n(); ++v)
    if (g.owner(v) == player) s.next_move[v][0] = choice[v];
  return s;
}

std::string check_strategy(const CostGame& g, const StrategySpec& s) {
  if (s.player != 0 && s.player != 1) return "player must be 0 or 1";
  if (s.num_states < 1) return "strategy needs at least one state";
  if (s.initial < 0 || s.initial >= s.num_states) return "initial state out of range";
  if (static_cast<int>(s.update.size()) != s.num_states) return "update table has wrong height";
  for (int m = 0; m < s.num_states; ++m) {
    if (s.update[m].size() != g.edges.size()) return "update table has wrong width";
    for (int x : s.update[m])
      if (x < 0 || x >= s.num_states) return "update targets unknown state";
  }
  if (static_cast<int>(s.next_move.size()) != g.n()) return "next-move table has wrong height";
  for (int v = 0; v < g.n(); ++v) {
    if (static_cast<int>(s.next_move[v].size()) != s.num_states)
      return "next-move table has wrong width";
    if (g.owner(v) != s.player) continue;
    for (int m = 0; m < s.num_states; ++m) {
      int t = s.next_move[v][m];
      bool ok = false;
      for (int i : g.out[v]) ok = ok || g.edges[i].target == t;
      if (!ok)
        return "next move at vertex " + std::to_string(v) + " state " + std::to_string(m) +
               " is not a successor";
    }
  }
  return "";
}

void require_strategy(const CostGame& g, const StrategySpec& s) {
  auto msg = check_strategy(g, s);
  if (!msg.empty()) throw Error("strategy", msg);
}

// Identity updates are omitted from the text form; the parser restores them.
std::string write_strat(const CostGame& g, const StrategySpec& s) {
  std::ostringstream os;
  os << "strategy " << s.player << " " << s.num_states << " " << s.initial << "\n";
  for (int m = 0; m < s.num_states; ++m)
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      int x = s.update[m][i];
      if (x == m) continue;
      const auto& e = g.edges[i];
      os << "u " << m << " " << e.source << " " << e.cost << " " << e.target << " " << x << "\n";
    }
  for (int v = 0; v < g.n(); ++v) {
    if (g.owner(v) != s.player) continue;
    for (int m = 0; m < s.num_states; ++m)
      os << "n " << v << " " << m << " " << s.next_move[v][m] << "\n";
  }
  return os.str();
}

StrategySpec parse_strat(const CostGame& g, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header = false;
  StrategySpec s;
  auto fail = [&](const std::string& msg) {
    throw Error("parse", "line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto p = line.find('#');
    if (p != std::string::npos) line = line.substr(0, p);
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    if (!header) {
      if (kind != "strategy" || !(ls >> s.player >> s.num_states >> s.initial))
        fail("expected 'strategy <player> <num-states> <initial-state>'");
      if (s.num_states < 1 || s.num_states > 50000000) fail("bad state count");
      s.update.assign(s.num_states, std::vector<int>(g.edges.size()));
      for (int m = 0; m < s.num_states; ++m)
        for (std::size_t i = 0; i < g.edges.size(); ++i) s.update[m][i] = m;
      s.next_move.assign(g.n(), std::vector<int>(s.num_states, -1));
      header = true;
    } else if (kind == "u") {
      long long m, src, cost, tgt, nx;
      if (!(ls >> m >> src >> cost >> tgt >> nx)) fail("malformed update line");
      if (m < 0 || m >= s.num_states) fail("unknown state");
      int e = g.find_edge(static_cast<int>(src), static_cast<int>(tgt), cost);
      if (e < 0) fail("unknown edge");
      s.update[m][e] = static_cast<int>(nx);
    } else if (kind == "n") {
      long long v, m, t;
      if (!(ls >> v >> m >> t)) fail("malformed next-move line");
      if (v < 0 || v >= g.n() || m < 0 || m >= s.num_states) fail("unknown vertex/state");
      s.next_move[v][m] = static_cast<int>(t);
    } else {
      fail("unknown line kind '" + kind + "'");
    }
    std::string extra;
    if (ls >> extra) fail("trailing token '" + extra + "'");
  }
  if (!header) throw Error("parse", "missing strategy header");
  require_strategy(g, s);
  return s;
}

}  // namespace cg
