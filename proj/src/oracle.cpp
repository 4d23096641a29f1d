#include "chordal/oracle.hpp"

namespace chordal {

OracleGraph oracle_graph(const TreeModel& m) {
  std::uint32_t n = m.vertex_count();
  std::size_t words = (m.tree_nodes + 64) / 64;
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(n) * words, 0);
  for (std::uint32_t i = 0; i < n; ++i)
    for (Label v : m.subtrees[i])
      masks[i * words + v / 64] |= 1ULL << (v % 64);

  OracleGraph g;
  g.n = n;
  g.adj.assign(static_cast<std::size_t>(n) * n, false);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      bool hit = false;
      for (std::size_t w = 0; w < words && !hit; ++w)
        hit = (masks[i * words + w] & masks[j * words + w]) != 0;
      if (hit) {
        g.adj[static_cast<std::size_t>(i) * n + j] = true;
        g.adj[static_cast<std::size_t>(j) * n + i] = true;
      }
    }
  }
  return g;
}

}  // namespace chordal
