#pragma once

#include "chordal/bitvector.hpp"

#include <utility>

namespace chordal {

/// Rooted ordinal tree after heavy-path decomposition. Children are reordered so
/// the heavy child (largest subtree, ties to the smallest original id) comes
/// first and labels are preorder ranks, so the labels of any subtree form the
/// contiguous range [v, v + subtree_size(v) - 1] and heavy paths are label runs.
class PreparedTree {
 public:
  PreparedTree() = default;

  /// parents is 1-based by original id, parents[root] == 0.
  static PreparedTree build(const std::vector<Label>& parents_by_orig, Label root_orig);

  Label node_count() const { return n_; }
  Label root() const { return 1; }

  Label label_of(Label orig) const { return label_of_orig_[check(orig) - 1]; }
  Label original_of(Label label) const { return orig_of_label_[check(label) - 1]; }

  Label parent(Label v) const { return parent_[check(v) - 1]; }  // 0 for the root
  std::uint32_t depth(Label v) const { return depth_[check(v) - 1]; }
  Label subtree_size(Label v) const { return size_[check(v) - 1]; }
  Label subtree_end(Label v) const { return v + subtree_size(v) - 1; }

  std::uint32_t child_count(Label v) const {
    check(v);
    return child_off_[v] - child_off_[v - 1];
  }
  Label child(Label v, std::uint32_t q) const {  // q-th child, 1-based; 0 if degree < q
    if (q < 1 || q > child_count(v)) return kNone;
    return child_arr_[child_off_[v - 1] + q - 1];
  }
  Label leftmost_child(Label v) const { return child(v, 1); }

  Label heavy_path_start(Label v) const { return head_[check(v) - 1]; }

  bool is_ancestor(Label a, Label d) const {
    check(a);
    check(d);
    return a <= d && d <= subtree_end(a);
  }

  Label lca(Label a, Label b) const;

  /// True iff x lies on the tree path between a and b.
  bool on_path(Label x, Label a, Label b) const {
    Label apex = lca(a, b);
    return depth(x) >= depth(apex) && (lca(x, a) == x || lca(x, b) == x);
  }

  /// Maximal heavy-path label runs covering the path between a and b,
  /// at most 2*floor(log2 n) + 1 of them.
  std::vector<std::pair<Label, Label>> path_segments(Label a, Label b) const;

  /// Labels on the path between a and b (unsorted).
  std::vector<Label> path_nodes(Label a, Label b) const;

  const BitVector& balanced_parens() const { return bp_; }
  std::uint64_t bits() const { return bp_.bits(); }

  void serialize(ByteWriter& w) const;  // BP only; navigation is rebuilt on load
  static PreparedTree deserialize(ByteReader& r);

 private:
  Label check(Label v) const {
    if (v < 1 || v > n_) throw std::out_of_range("PreparedTree: label out of range");
    return v;
  }
  void derive_from_structure();  // fills size_, head_, bp_ from parent_/children

  Label n_ = 0;
  std::vector<Label> parent_;
  std::vector<std::uint32_t> depth_;
  std::vector<Label> size_;
  std::vector<Label> head_;
  std::vector<std::uint32_t> child_off_;  // n_+1 offsets into child_arr_
  std::vector<Label> child_arr_;
  std::vector<Label> orig_of_label_;
  std::vector<Label> label_of_orig_;
  BitVector bp_;
};

}  // namespace chordal
