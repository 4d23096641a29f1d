#pragma once

#include "chordal/bits.hpp"

#include <iosfwd>

namespace chordal {

/// Host tree plus one connected node set per graph vertex, everything in
/// original ids. Text form:
///
///   t root
///   p_1 p_2 ... p_t        (0 for the root)
///   n k
///   one line per vertex: its node ids
struct TreeModel {
  Label tree_nodes = 0;
  Label root = 0;
  std::vector<Label> parents;               // 1-based by original id
  std::uint32_t k = 0;                      // declared max leaf count per subtree
  std::vector<std::vector<Label>> subtrees; // sorted node ids per vertex

  std::uint32_t vertex_count() const { return static_cast<std::uint32_t>(subtrees.size()); }

  /// Leaf count of one subtree: nodes with at most one neighbour inside the set.
  std::uint32_t leaf_count(std::uint32_t vertex) const;

  /// Throws ModelError on disconnected subtrees, leaf counts above k, duplicate
  /// or out-of-range node ids.
  void validate() const;

  static TreeModel parse(std::istream& in);
  static TreeModel parse_file(const std::string& path);
  std::string to_text() const;
  void write_file(const std::string& path) const;
};

}  // namespace chordal
