#pragma once

#include <string>
#include <vector>

namespace cg {

// Explicit max-parity game in CSR form.
struct ParityGame {
  std::vector<int> owner;
  std::vector<int> color;
  std::vector<int> off{0};  // successors of v are adj[off[v] .. off[v+1])
  std::vector<int> adj;
  int initial = 0;

  int n() const { return static_cast<int>(owner.size()); }
  int add_vertex(int own, int col) {
    owner.push_back(own);
    color.push_back(col);
    return n() - 1;
  }
  // Successor lists must be appended vertex by vertex, in id order.
  void close_vertex(const std::vector<int>& succ) {
    adj.insert(adj.end(), succ.begin(), succ.end());
    off.push_back(static_cast<int>(adj.size()));
  }
};

struct SolveResult {
  std::vector<int> winner;    // per vertex
  std::vector<int> strategy;  // chosen successor for the winner's own vertices, -1 elsewhere
  int initial = 0;
  int winner_from_initial() const { return winner[initial]; }
};

SolveResult solve_parity(const ParityGame& pg);

// Consistency check of a solution: regions closed under the winners'
// strategies and opponents' moves. Empty string iff fine.
std::string check_parity_solution(const ParityGame& pg, const SolveResult& r);

}  // namespace cg
