#pragma once

#include "chordal/bits.hpp"

#include <optional>

namespace chordal {

/// Colored counting structure over a complete binary basis tree: every node is
/// a single-node colored subtree, a fixed family of leaf-block-to-root subtrees
/// saturates the leaf bound, and each free dependent vertex is the minimal
/// subtree spanning a chosen k-node set.
struct LBInstance {
  std::uint32_t basis_nodes = 7;    // m = 2^h - 1, heap indexed, colors = node ids
  std::uint32_t leaf_bound = 3;     // k
  std::uint32_t free_dependents = 1;

  std::uint32_t fixed_dependents() const { return (basis_nodes + 1) / (2 * (leaf_bound - 1)); }
  void validate() const;
};

using NodeSet = std::vector<std::uint32_t>;  // sorted basis node ids; ids double as colors

/// Minimal connected subtree of the heap-indexed complete binary tree spanning J.
NodeSet lb_span(std::uint32_t m, const NodeSet& j_nodes);

/// The fixed subtrees: consecutive leaf blocks of size k-1 joined to the root.
std::vector<NodeSet> lb_fixed_subtrees(const LBInstance& inst);

/// Colored-basis neighbour set of every free dependent for one choice list
/// (a dependent's neighbours among the basis are exactly its spanned nodes).
std::vector<NodeSet> lb_construct(const LBInstance& inst, const std::vector<NodeSet>& choices);

struct DistinctnessReport {
  std::uint64_t structures = 0;  // distinct choice tuples examined
  std::uint64_t distinct = 0;    // distinct neighbour-set vectors among them
  bool all_distinct = false;
  bool exhaustive = false;
  std::optional<std::pair<std::vector<NodeSet>, std::vector<NodeSet>>> witness;  // a colliding pair
};

/// Checks whether the given choice tuples (duplicates ignored) all produce
/// different neighbour-set vectors; on failure the witness holds a colliding pair.
DistinctnessReport lb_distinctness(const LBInstance& inst,
                                   const std::vector<std::vector<NodeSet>>& sample);

/// Same over all choice tuples when their count is at most cap, else over a
/// seeded sample of that size.
DistinctnessReport lb_distinctness(const LBInstance& inst, std::uint64_t cap = 1'000'000,
                                   std::uint64_t seed = 1);

}  // namespace chordal
