#pragma once

#include "chordal/decompose.hpp"
#include "chordal/monotone_sequence.hpp"

namespace chordal {

/// Probe counters for the cost invariants; filled when a non-null pointer is
/// passed to a query.
struct StoreProbeStats {
  std::uint64_t predicate_calls = 0;   // lca / on-path evaluations in the intersection test
  std::uint64_t segments_visited = 0;  // heavy-path segments of the query path
  std::uint64_t index_probes = 0;      // binary-search steps plus stab-tree node visits
  std::uint64_t reported = 0;
};

/// Multiset of tree paths kept sorted by (start, end, insertion order).
/// Answers path-level intersection, endpoint retrieval and enumeration of all
/// stored paths meeting a query path. Endpoints are the space-dominant part
/// (starts differential-coded, ends packed); the enumeration index keeps, per
/// heavy path, the stored-path projections with a max-reach tree for stabbing,
/// plus all paths bucketed by apex.
struct PathGraphStoreBuild;

class PathGraphStore {
 public:
  PathGraphStore() = default;

  static PathGraphStoreBuild build(const PreparedTree& tree, const std::vector<TreePath>& paths);

  std::uint32_t size() const { return m_; }

  TreePath path_endpoints(std::uint32_t u) const {
    if (u < 1 || u > m_) throw std::out_of_range("PathGraphStore: path index out of range");
    return TreePath{static_cast<Label>(starts_.at(u)), static_cast<Label>(ends_.get(u - 1) + 1)};
  }

  bool paths_intersect(const TreePath& p, const TreePath& q, StoreProbeStats* stats = nullptr) const;

  /// 1-based indices of all stored paths sharing a node with (s, t), ascending,
  /// each exactly once. The query path need not be stored.
  std::vector<std::uint32_t> intersecting_paths(Label s, Label t, StoreProbeStats* stats = nullptr) const;

  std::uint64_t endpoint_bits() const { return starts_.bits() + ends_.bits(); }

  void serialize(ByteWriter& w) const;  // endpoints only; the index is rebuilt on load
  static PathGraphStore deserialize(ByteReader& r, const PreparedTree& tree);

 private:
  void build_index();
  void check_labels(Label s, Label t) const;

  const PreparedTree* tree_ = nullptr;
  std::uint32_t m_ = 0;
  MonotoneSequence starts_;
  PackedIntArray ends_;

  // paths bucketed by apex label
  std::vector<Label> apex_keys_;
  std::vector<std::uint32_t> apex_ids_;

  // per heavy path: projections sorted by top label, max-bottom stab tree
  std::vector<Label> group_heads_;
  std::vector<std::uint32_t> group_off_;   // into ent_* arrays
  std::vector<Label> ent_top_, ent_bot_;
  std::vector<std::uint32_t> ent_id_;
  std::vector<std::uint32_t> tree_off_;    // into stab_max_, per group (2 * padded size)
  std::vector<std::uint32_t> stab_size_;   // padded pow2 leaf count per group
  std::vector<Label> stab_max_;
};

struct PathGraphStoreBuild {
  PathGraphStore store;
  std::vector<std::uint32_t> store_index_of_input;  // input position -> 1-based store index
};

}  // namespace chordal
