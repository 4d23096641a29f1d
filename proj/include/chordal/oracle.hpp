#pragma once

#include "chordal/tree_model.hpp"

namespace chordal {

/// Brute-force intersection graph: adjacency by explicit node-set intersection.
struct OracleGraph {
  std::uint32_t n = 0;
  std::vector<bool> adj;  // n*n, row-major, zero diagonal

  bool adjacent(Vertex i, Vertex j) const { return adj[(i - 1) * static_cast<std::size_t>(n) + (j - 1)]; }
  std::vector<Vertex> neighbourhood(Vertex i) const {
    std::vector<Vertex> r;
    for (Vertex j = 1; j <= n; ++j)
      if (j != i && adjacent(i, j)) r.push_back(j);
    return r;
  }
  std::uint32_t degree(Vertex i) const { return static_cast<std::uint32_t>(neighbourhood(i).size()); }
};

OracleGraph oracle_graph(const TreeModel& m);

}  // namespace chordal
