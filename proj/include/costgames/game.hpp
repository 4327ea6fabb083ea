#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "costgames/error.hpp"

namespace cg {

using Cost = std::int64_t;
inline constexpr Cost kInf = std::numeric_limits<Cost>::max();

std::string cost_str(Cost c);

enum class Encoding { Unary, Binary };

struct Vertex {
  int id = 0;
  int owner = 0;
  int color = 0;
};

struct Edge {
  int source = 0;
  int target = 0;
  Cost cost = 0;
};

// A parity game with costs. Edges are kept sorted by (source, target, cost);
// out[v] lists the indices of v's outgoing edges in that order.
struct CostGame {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  int initial = 0;
  Encoding encoding = Encoding::Unary;
  std::vector<std::vector<int>> out;

  int n() const { return static_cast<int>(vertices.size()); }
  int color(int v) const { return vertices[v].color; }
  int owner(int v) const { return vertices[v].owner; }
  Cost max_cost() const;
  std::vector<int> odd_colors() const;  // D, ascending
  int max_color() const;

  // Sorts edges and rebuilds the adjacency. Call after editing edges.
  void reindex();
  // Index of the edge (s, t, c) or -1.
  int find_edge(int s, int t, Cost c) const;
};

CostGame make_game(std::vector<Vertex> vs, std::vector<Edge> es, int initial,
                   Encoding enc = Encoding::Unary);

struct Violation {
  std::string rule;
  std::string where;
};

std::vector<Violation> validate_game(const CostGame& g);
void require_valid(const CostGame& g);

inline constexpr std::size_t kDefaultSubdivisionBudget = 1000000;

CostGame subdivide_costs(const CostGame& g,
                         std::size_t vertex_budget = kDefaultSubdivisionBudget);

// Same arena with every positive cost replaced by 1.
CostGame abstract_costs(const CostGame& g);

std::string export_dot(const CostGame& g);

CostGame parse_cpg(const std::string& text);
std::string write_cpg(const CostGame& g);
CostGame load_cpg(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace cg
