#pragma once

#include "chordal/prepared_tree.hpp"
#include "chordal/tree_model.hpp"

#include <optional>

namespace chordal {

/// Tree path given by its endpoints' preorder labels, start <= end.
/// (s, s) is a single-node path.
struct TreePath {
  Label s = 0;
  Label t = 0;

  static TreePath make(Label a, Label b) { return a <= b ? TreePath{a, b} : TreePath{b, a}; }
  bool operator==(const TreePath&) const = default;
  auto operator<=>(const TreePath&) const = default;
};

inline Label apex_of(const PreparedTree& tree, const TreePath& p) { return tree.lca(p.s, p.t); }

bool paths_share_node(const PreparedTree& tree, const TreePath& p, const TreePath& q);

/// Enclosure order on one vertex's stored paths: P precedes Q when P's endpoint
/// range contains Q's.
inline bool encloses(const TreePath& p, const TreePath& q) {
  return p.s <= q.s && q.t <= p.t;
}

/// Stored paths of one subtree (node labels, sorted ascending): leaves paired
/// smallest-with-largest in preorder; an odd leaf out is paired with the
/// subtree's apex and that path goes last. A singleton yields [(v, v)].
std::vector<TreePath> subtree_paths(const PreparedTree& tree, const std::vector<Label>& nodes);

/// Apex-to-apex path joining two node-disjoint stored paths with encloses(p, q);
/// nullopt when they share a node. Throws when the enclosure precondition fails
/// on disjoint paths.
std::optional<TreePath> connector(const PreparedTree& tree, const TreePath& p, const TreePath& q);

/// Union of a vertex's stored paths and the connectors of consecutive pairs;
/// contract: equals the subtree the paths were derived from. Sorted labels.
std::vector<Label> reconstruct_subtree(const PreparedTree& tree, const std::vector<TreePath>& paths);

/// Connector presence flags for consecutive stored paths: flags[j-1] is true iff
/// paths j and j+1 are node-disjoint.
std::vector<bool> connector_flags(const PreparedTree& tree, const std::vector<TreePath>& paths);

/// Per-vertex decomposition of a whole model against its prepared tree.
struct PathDecomposition {
  std::vector<std::vector<TreePath>> paths;  // per vertex, decomposition order
  std::vector<std::vector<bool>> flags;      // per vertex, k_i - 1 connector flags
};

PathDecomposition decompose_model(const PreparedTree& tree, const TreeModel& m);

/// Optional parity transform: every subtree with an odd leaf count >= 3 gains
/// two fresh tree nodes attached to one unpaired leaf, making the count even.
/// The intersection graph is unchanged; the declared k grows to cover any
/// subtree that was already at the bound with an odd count.
TreeModel normalize_even_leaves(const TreeModel& m);

}  // namespace chordal
