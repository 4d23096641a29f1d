#pragma once

#include "chordal/tree_model.hpp"

namespace chordal {

struct GenParams {
  std::uint32_t n = 1;          // graph vertices
  std::uint32_t k = 2;          // leaf bound, >= 2
  Label tree_nodes = 1;
  std::uint64_t seed = 0;
  // Subtree mix. Defaults stress both the stored-path and the connector branch
  // of the adjacency walk; the space suite uses kleaf_frac = 1 so every subtree
  // saturates the leaf bound.
  double singleton_frac = 0.20;
  double kleaf_frac = 0.20;
};

/// Deterministic random model: uniform parent attachment for the tree, then per
/// vertex a randomized connected expansion that never exceeds k induced leaves.
TreeModel gen_model(const GenParams& p);

}  // namespace chordal
