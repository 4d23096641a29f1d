#include "chordal/decompose.hpp"

#include <algorithm>

namespace chordal {

bool paths_share_node(const PreparedTree& tree, const TreePath& p, const TreePath& q) {
  Label pa = apex_of(tree, p);
  Label qa = apex_of(tree, q);
  return tree.on_path(qa, p.s, p.t) || tree.on_path(pa, q.s, q.t);
}

std::vector<TreePath> subtree_paths(const PreparedTree& tree, const std::vector<Label>& nodes) {
  if (nodes.empty()) throw ModelError("subtree_paths: empty node set");
  std::vector<Label> leaves;
  for (Label v : nodes) {
    std::uint32_t deg = 0;
    Label p = tree.parent(v);
    if (p != kNone && std::binary_search(nodes.begin(), nodes.end(), p)) ++deg;
    for (std::uint32_t q = 1; deg <= 1; ++q) {
      Label c = tree.child(v, q);
      if (c == kNone) break;
      if (std::binary_search(nodes.begin(), nodes.end(), c)) ++deg;
    }
    if (deg <= 1) leaves.push_back(v);
  }
  // nodes sorted ascending implies leaves already in preorder
  std::size_t kc = leaves.size();
  std::vector<TreePath> paths;
  paths.reserve((kc + 1) / 2);
  for (std::size_t j = 0; 2 * (j + 1) <= kc; ++j)
    paths.push_back(TreePath::make(leaves[j], leaves[kc - 1 - j]));
  if (kc % 2 == 1) {
    Label apex = tree.lca(nodes.front(), nodes.back());
    paths.push_back(TreePath::make(leaves[kc / 2], apex));
  }
  return paths;
}

std::optional<TreePath> connector(const PreparedTree& tree, const TreePath& p, const TreePath& q) {
  if (paths_share_node(tree, p, q)) return std::nullopt;
  if (!encloses(p, q)) throw std::invalid_argument("connector: paths are not enclosure-ordered");
  return TreePath::make(apex_of(tree, p), apex_of(tree, q));
}

std::vector<bool> connector_flags(const PreparedTree& tree, const std::vector<TreePath>& paths) {
  std::vector<bool> flags;
  for (std::size_t j = 0; j + 1 < paths.size(); ++j)
    flags.push_back(!paths_share_node(tree, paths[j], paths[j + 1]));
  return flags;
}

std::vector<Label> reconstruct_subtree(const PreparedTree& tree, const std::vector<TreePath>& paths) {
  std::vector<Label> out;
  auto add_path = [&](const TreePath& p) {
    for (Label v : tree.path_nodes(p.s, p.t)) out.push_back(v);
  };
  for (const auto& p : paths) add_path(p);
  for (std::size_t j = 0; j + 1 < paths.size(); ++j)
    if (auto c = connector(tree, paths[j], paths[j + 1])) add_path(*c);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PathDecomposition decompose_model(const PreparedTree& tree, const TreeModel& m) {
  PathDecomposition d;
  d.paths.resize(m.vertex_count());
  d.flags.resize(m.vertex_count());
  for (std::uint32_t i = 0; i < m.vertex_count(); ++i) {
    std::vector<Label> labels;
    labels.reserve(m.subtrees[i].size());
    for (Label orig : m.subtrees[i]) labels.push_back(tree.label_of(orig));
    std::sort(labels.begin(), labels.end());
    d.paths[i] = subtree_paths(tree, labels);
    d.flags[i] = connector_flags(tree, d.paths[i]);
  }
  return d;
}

TreeModel normalize_even_leaves(const TreeModel& m) {
  TreeModel out = m;
  std::vector<std::vector<Label>> adj(m.tree_nodes + 1);
  for (Label v = 1; v <= m.tree_nodes; ++v) {
    Label p = m.parents[v - 1];
    if (p != 0) {
      adj[v].push_back(p);
      adj[p].push_back(v);
    }
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  std::uint32_t max_leaves = 0;
  for (auto& nodes : out.subtrees) {  // fresh nodes of one vertex never occur in another's set
    std::vector<Label> subtree_leaves;
    for (Label v : nodes) {
      std::uint32_t deg = 0;
      for (Label u : adj[v])
        if (std::binary_search(nodes.begin(), nodes.end(), u)) ++deg;
      if (deg <= 1) subtree_leaves.push_back(v);
    }
    std::uint32_t leaves = static_cast<std::uint32_t>(subtree_leaves.size());
    if (leaves >= 3 && leaves % 2 == 1) {
      // the middle leaf in original-id order is the unpaired one
      Label host = subtree_leaves[subtree_leaves.size() / 2];
      for (int extra = 0; extra < 2; ++extra) {
        out.parents.push_back(host);
        ++out.tree_nodes;
        nodes.push_back(out.tree_nodes);
      }
      std::sort(nodes.begin(), nodes.end());
      ++leaves;  // the host leaf turned internal, two fresh leaves appeared
    }
    max_leaves = std::max(max_leaves, leaves);
  }
  out.k = std::max(out.k, max_leaves);
  out.validate();
  return out;
}

}  // namespace chordal
