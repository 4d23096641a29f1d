#include "chordal/tree_model.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace chordal {

namespace {

std::vector<std::vector<Label>> adjacency(const TreeModel& m) {
  std::vector<std::vector<Label>> adj(m.tree_nodes + 1);
  for (Label v = 1; v <= m.tree_nodes; ++v) {
    Label p = m.parents[v - 1];
    if (p != 0) {
      adj[v].push_back(p);
      adj[p].push_back(v);
    }
  }
  return adj;
}

std::uint32_t leaf_count_of(const std::vector<Label>& nodes,
                            const std::vector<std::vector<Label>>& adj) {
  std::uint32_t leaves = 0;
  for (Label v : nodes) {
    std::uint32_t deg = 0;
    for (Label u : adj[v])
      if (std::binary_search(nodes.begin(), nodes.end(), u)) ++deg;
    if (deg <= 1) ++leaves;
  }
  return leaves;
}

bool connected_in_tree(const std::vector<Label>& nodes,
                       const std::vector<std::vector<Label>>& adj) {
  if (nodes.empty()) return false;
  std::vector<Label> reach{nodes[0]};
  std::vector<bool> seen(nodes.size(), false);
  seen[0] = true;
  for (std::size_t i = 0; i < reach.size(); ++i) {
    for (Label u : adj[reach[i]]) {
      auto it = std::lower_bound(nodes.begin(), nodes.end(), u);
      if (it != nodes.end() && *it == u) {
        std::size_t idx = static_cast<std::size_t>(it - nodes.begin());
        if (!seen[idx]) {
          seen[idx] = true;
          reach.push_back(u);
        }
      }
    }
  }
  return reach.size() == nodes.size();
}

}  // namespace

std::uint32_t TreeModel::leaf_count(std::uint32_t vertex) const {
  auto adj = adjacency(*this);
  return leaf_count_of(subtrees[vertex - 1], adj);
}

void TreeModel::validate() const {
  auto adj = adjacency(*this);
  for (std::uint32_t i = 1; i <= vertex_count(); ++i) {
    const auto& nodes = subtrees[i - 1];
    std::string where = "vertex " + std::to_string(i);
    if (nodes.empty()) throw ModelError(where + ": empty node set");
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (nodes[j] < 1 || nodes[j] > tree_nodes)
        throw ModelError(where + ": node id out of range");
      if (j > 0 && nodes[j] == nodes[j - 1])
        throw ModelError(where + ": duplicate node id " + std::to_string(nodes[j]));
    }
    if (!connected_in_tree(nodes, adj)) throw ModelError(where + ": subtree not connected");
    std::uint32_t leaves = leaf_count_of(nodes, adj);
    if (leaves > k)
      throw ModelError(where + ": " + std::to_string(leaves) + " leaves exceed k=" +
                       std::to_string(k));
  }
}

TreeModel TreeModel::parse(std::istream& in) {
  TreeModel m;
  std::string line;
  std::size_t lineno = 0;
  auto next_line = [&]() {
    if (!std::getline(in, line)) throw ModelError("line " + std::to_string(lineno + 1) + ": unexpected end of input");
    ++lineno;
    return std::istringstream(line);
  };
  auto fail = [&](const std::string& msg) -> ModelError {
    return ModelError("line " + std::to_string(lineno) + ": " + msg);
  };

  {
    auto ls = next_line();
    long long t, r;
    if (!(ls >> t >> r) || t < 1 || r < 1 || r > t) throw fail("expected 'tree_nodes root'");
    m.tree_nodes = static_cast<Label>(t);
    m.root = static_cast<Label>(r);
  }
  {
    auto ls = next_line();
    m.parents.resize(m.tree_nodes);
    for (Label v = 1; v <= m.tree_nodes; ++v) {
      long long p;
      if (!(ls >> p) || p < 0 || p > static_cast<long long>(m.tree_nodes))
        throw fail("bad parent entry for node " + std::to_string(v));
      m.parents[v - 1] = static_cast<Label>(p);
    }
  }
  std::uint32_t n;
  {
    auto ls = next_line();
    long long nn, kk;
    if (!(ls >> nn >> kk) || nn < 1 || kk < 2) throw fail("expected 'n_vertices k' with k >= 2");
    n = static_cast<std::uint32_t>(nn);
    m.k = static_cast<std::uint32_t>(kk);
  }
  m.subtrees.resize(n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    auto ls = next_line();
    long long v;
    while (ls >> v) {
      if (v < 1 || v > static_cast<long long>(m.tree_nodes))
        throw fail("node id out of range in vertex " + std::to_string(i));
      m.subtrees[i - 1].push_back(static_cast<Label>(v));
    }
    if (m.subtrees[i - 1].empty()) throw fail("vertex " + std::to_string(i) + " has no nodes");
    std::sort(m.subtrees[i - 1].begin(), m.subtrees[i - 1].end());
  }
  m.validate();
  return m;
}

TreeModel TreeModel::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file: " + path);
  return parse(in);
}

std::string TreeModel::to_text() const {
  std::ostringstream out;
  out << tree_nodes << ' ' << root << '\n';
  for (Label v = 1; v <= tree_nodes; ++v) out << parents[v - 1] << (v == tree_nodes ? '\n' : ' ');
  out << vertex_count() << ' ' << k << '\n';
  for (const auto& nodes : subtrees) {
    for (std::size_t j = 0; j < nodes.size(); ++j) out << nodes[j] << (j + 1 == nodes.size() ? '\n' : ' ');
  }
  return out.str();
}

void TreeModel::write_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ModelError("cannot open output file: " + path);
  out << to_text();
}

}  // namespace chordal
