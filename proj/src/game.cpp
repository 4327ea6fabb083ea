#include "costgames/game.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace cg {

std::string cost_str(Cost c) { return c == kInf ? "inf" : std::to_string(c); }

Cost CostGame::max_cost() const {
  Cost w = 0;
  for (const auto& e : edges) w = std::max(w, e.cost);
  return w;
}

std::vector<int> CostGame::odd_colors() const {
  std::set<int> s;
  for (const auto& v : vertices)
    if (v.color % 2 == 1) s.insert(v.color);
  return {s.begin(), s.end()};
}

int CostGame::max_color() const {
  int m = 0;
  for (const auto& v : vertices) m = std::max(m, v.color);
  return m;
}

void CostGame::reindex() {
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.source != b.source) return a.source < b.source;
    if (a.target != b.target) return a.target < b.target;
    return a.cost < b.cost;
  });
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](const Edge& a, const Edge& b) {
                            return a.source == b.source && a.target == b.target &&
                                   a.cost == b.cost;
                          }),
              edges.end());
  out.assign(vertices.size(), {});
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    int s = edges[i].source;
    if (s >= 0 && s < n()) out[s].push_back(i);
  }
}

int CostGame::find_edge(int s, int t, Cost c) const {
  if (s < 0 || s >= n()) return -1;
  for (int i : out[s])
    if (edges[i].target == t && edges[i].cost == c) return i;
  return -1;
}

CostGame make_game(std::vector<Vertex> vs, std::vector<Edge> es, int initial,
                   Encoding enc) {
  CostGame g;
  g.vertices = std::move(vs);
  g.edges = std::move(es);
  g.initial = initial;
  g.encoding = enc;
  g.reindex();
  return g;
}

std::vector<Violation> validate_game(const CostGame& g) {
  std::vector<Violation> rep;
  if (g.vertices.empty()) rep.push_back({"empty arena", "game"});
  for (int i = 0; i < g.n(); ++i) {
    const auto& v = g.vertices[i];
    std::string w = "vertex " + std::to_string(i);
    if (v.id != i) rep.push_back({"non-dense vertex id", w});
    if (v.owner != 0 && v.owner != 1) rep.push_back({"owner not 0/1", w});
    if (v.color < 0) rep.push_back({"negative color", w});
  }
  std::vector<int> outdeg(g.vertices.size(), 0);
  const Edge* prev = nullptr;
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
    if (e.cost < 0) rep.push_back({"negative cost", w});
    if (g.encoding == Encoding::Unary && e.cost > 1)
      rep.push_back({"non-abstract cost", w});
  }
  for (int i = 0; i < g.n(); ++i)
    if (outdeg[i] == 0) rep.push_back({"terminal vertex", "vertex " + std::to_string(i)});
  if (g.initial < 0 || g.initial >= g.n())
    rep.push_back({"unknown initial vertex", "game"});
  return rep;
}

void require_valid(const CostGame& g) {
  auto rep = validate_game(g);
  if (!rep.empty()) throw Error("invalid", rep.front().where + ": " + rep.front().rule);
}

CostGame subdivide_costs(const CostGame& g, std::size_t vertex_budget) {
  require_valid(g);
  std::size_t total = g.vertices.size();
  for (const auto& e : g.edges)
    if (e.cost >= 2) {
      total += static_cast<std::size_t>(e.cost - 1);
      if (total > vertex_budget)
        throw Error("budget", "subdivision blow-up: more than " +
                                  std::to_string(vertex_budget) + " vertices");
    }
  std::vector<Vertex> vs = g.vertices;
  std::vector<Edge> es;
  for (const auto& e : g.edges) {
    if (e.cost <= 1) {
      es.push_back(e);
      continue;
    }
    int prev = e.source;
    for (Cost k = 0; k + 1 < e.cost; ++k) {
      int id = static_cast<int>(vs.size());
      vs.push_back({id, g.owner(e.source), 0});
      es.push_back({prev, id, 1});
      prev = id;
    }
    es.push_back({prev, e.target, 1});
  }
  return make_game(std::move(vs), std::move(es), g.initial, Encoding::Unary);
}

CostGame abstract_costs(const CostGame& g) {
  CostGame a = g;
  for (auto& e : a.edges) e.cost = e.cost > 0 ? 1 : 0;
  a.encoding = Encoding::Unary;
  a.reindex();
  return a;
}

std::string export_dot(const CostGame& g) {
  std::ostringstream os;
  os << "digraph game {\n";
  for (const auto& v : g.vertices) {
    os << "  v" << v.id << " [shape=" << (v.owner == 0 ? "circle" : "box")
       << ", label=\"" << v.id << ":" << v.color << "\"";
    if (v.id == g.initial) os << ", penwidth=2";
    os << "];\n";
  }
  for (const auto& e : g.edges)
    os << "  v" << e.source << " -> v" << e.target << " [label=\"" << e.cost << "\"];\n";
  os << "}\n";
  return os.str();
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
  throw Error("parse", "line " + std::to_string(line) + ": " + msg);
}

long long parse_int(const std::string& tok, int line) {
  if (tok.empty()) parse_fail(line, "expected number");
  std::size_t i = 0;
  for (; i < tok.size(); ++i)
    if (tok[i] < '0' || tok[i] > '9') parse_fail(line, "bad number '" + tok + "'");
  if (tok.size() > 18) parse_fail(line, "number too large '" + tok + "'");
  return std::stoll(tok);
}

std::string strip_comment(const std::string& s) {
  auto p = s.find('#');
  return p == std::string::npos ? s : s.substr(0, p);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> toks;
  std::string t;
  while (is >> t) toks.push_back(t);
  return toks;
}

}  // namespace

CostGame parse_cpg(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header = false;
  int n = 0;
  CostGame g;
  std::vector<bool> seen;
  std::vector<Edge> es;
  int count = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') parse_fail(lineno, "CR line ending");
    auto toks = split_ws(strip_comment(line));
    if (toks.empty()) continue;
    if (!header) {
      if (toks.size() != 4 || toks[0] != "costparity")
        parse_fail(lineno, "expected 'costparity <n> <initial> <encoding>'");
      n = static_cast<int>(parse_int(toks[1], lineno));
      if (n < 1) parse_fail(lineno, "n must be >= 1");
      g.initial = static_cast<int>(parse_int(toks[2], lineno));
      if (toks[3] == "unary") g.encoding = Encoding::Unary;
      else if (toks[3] == "binary") g.encoding = Encoding::Binary;
      else parse_fail(lineno, "unknown encoding '" + toks[3] + "'");
      g.vertices.resize(n);
      seen.assign(n, false);
      header = true;
      continue;
    }
    if (toks.size() != 4) parse_fail(lineno, "expected '<id> <color> <owner> <succ:cost,...>'");
    int id = static_cast<int>(parse_int(toks[0], lineno));
    if (id >= n) parse_fail(lineno, "vertex id out of range");
    if (seen[id]) parse_fail(lineno, "duplicate vertex " + toks[0]);
    seen[id] = true;
    ++count;
    int color = static_cast<int>(parse_int(toks[1], lineno));
    int owner = static_cast<int>(parse_int(toks[2], lineno));
    if (owner > 1) parse_fail(lineno, "owner must be 0 or 1");
    g.vertices[id] = {id, owner, color};
    std::istringstream ls(toks[3]);
    std::string item;
    while (std::getline(ls, item, ',')) {
      auto c = item.find(':');
      if (c == std::string::npos) parse_fail(lineno, "expected succ:cost in '" + item + "'");
      int t = static_cast<int>(parse_int(item.substr(0, c), lineno));
      Cost w = parse_int(item.substr(c + 1), lineno);
      if (t >= n) parse_fail(lineno, "successor out of range");
      es.push_back({id, t, w});
    }
  }
  if (!header) parse_fail(lineno, "missing header");
  if (count != n) parse_fail(lineno, "expected " + std::to_string(n) + " vertex lines");
  g.edges = std::move(es);
  g.reindex();
  require_valid(g);
  return g;
}

std::string write_cpg(const CostGame& g) {
  std::ostringstream os;
  os << "costparity " << g.n() << " " << g.initial << " "
     << (g.encoding == Encoding::Unary ? "unary" : "binary") << "\n";
  for (const auto& v : g.vertices) {
    os << v.id << " " << v.color << " " << v.owner << " ";
    bool first = true;
    for (int i : g.out[v.id]) {
      if (!first) os << ",";
      first = false;
      os << g.edges[i].target << ":" << g.edges[i].cost;
    }
    os << "\n";
  }
  return os.str();
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("io", "cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("io", "cannot write " + path);
  f << text;
}

CostGame load_cpg(const std::string& path) { return parse_cpg(read_file(path)); }

}  // namespace cg
