#pragma once

#include "chordal/path_graph_store.hpp"
#include "chordal/permutation.hpp"

#include <memory>

namespace chordal {

enum class OddMode : std::uint8_t {
  kRootPair = 0,  // odd leaf counts pair the middle leaf with the subtree apex
  kAugment = 1,   // tree gains two fresh nodes per odd subtree before encoding
};

/// Upper bound used when filtering deepest-apex records during the upward walk
/// of a neighbourhood query. kQueryPathEnd takes the right endpoint of the
/// vertex's first stored path; it misses structures whose deepest apex lies
/// inside the query apex's subtree but beyond its largest leaf (see
/// tests/test_encoded_graph.cpp for a three-vertex fixture). kApexSubtreeEnd
/// takes the end of the apex's label range instead, which is sound because a
/// chain that reaches inside that range from a strict-ancestor bucket must pass
/// through the apex itself. Queries default to kApexSubtreeEnd.
enum class WalkBound : std::uint8_t { kApexSubtreeEnd = 0, kQueryPathEnd = 1 };

struct QueryStats {
  std::uint64_t store_probes = 0;     // intersection tests + connector evaluations in adjacent()
  std::uint64_t walk_iterations = 0;  // bucket stops during neighbourhood()
  StoreProbeStats store;              // aggregated from store-level queries
};

struct SpaceReport {
  std::uint32_t n = 0, k = 0;
  Label tree_nodes = 0;
  std::uint32_t stored_paths = 0;
  std::uint64_t tree_bits = 0;            // balanced parentheses of the host tree
  std::uint64_t store_endpoint_bits = 0;  // sorted starts + packed ends
  std::uint64_t path_count_bits = 0;
  std::uint64_t first_pos_bits = 0;
  std::uint64_t owner_bits = 0;
  std::uint64_t perm_bits = 0;
  std::uint64_t connector_flag_bits = 0;
  std::uint64_t first_flag_bits = 0;
  std::uint64_t apex_record_bits = 0;
  std::uint64_t total_bits = 0;
  std::uint64_t reference_bits = 0;  // (k-1) * n * ceil(log2 n)
};

/// The composed structure: a path-graph store over every vertex's stored paths
/// plus the per-vertex directories needed to answer adjacency and neighbourhood
/// queries without materializing subtrees. Vertices are renumbered by the start
/// node of their first stored path (ties by end node, then input order); the
/// mapping to the model's numbering is kept alongside.
class EncodedGraph {
 public:
  EncodedGraph() = default;
  EncodedGraph(EncodedGraph&&) = default;
  EncodedGraph& operator=(EncodedGraph&&) = default;

  static EncodedGraph build(const TreeModel& m, OddMode mode = OddMode::kRootPair);

  std::uint32_t vertex_count() const { return n_; }
  std::uint32_t leaf_bound() const { return k_; }
  std::uint32_t stored_paths_total() const { return store_.size(); }
  OddMode odd_mode() const { return mode_; }
  const PreparedTree& tree() const { return *tree_; }
  const PathGraphStore& store() const { return store_; }

  Vertex internal_of(Vertex original) const { return static_cast<Vertex>(internal_of_orig_.get(check(original) - 1) + 1); }
  Vertex original_of(Vertex internal) const { return static_cast<Vertex>(orig_of_internal_.get(check(internal) - 1) + 1); }

  /// Number of stored paths of vertex i (at least 1).
  std::uint32_t stored_path_count(Vertex i) const {
    return static_cast<std::uint32_t>(path_counts_.get(check(i) - 1));
  }

  /// Position of vertex i's first stored path in the vertex-grouped path order.
  std::uint64_t first_path_pos(Vertex i) const { return first_pos_.at(check(i)); }

  /// Store index of vertex i's first stored path.
  std::uint32_t first_path_store_index(Vertex i) const {
    return static_cast<std::uint32_t>(first_flags_.select(true, check(i)));
  }

  /// Store indices of stored paths 2..k_i of vertex i, in decomposition order.
  std::vector<std::uint32_t> extra_path_store_indices(Vertex i) const;

  /// Store index of the j-th stored path of vertex i, 1 <= j <= k_i.
  std::uint32_t stored_path_store_index(Vertex i, std::uint32_t j) const;

  /// True iff consecutive stored paths j and j+1 of vertex i are node-disjoint.
  bool is_connector(Vertex i, std::uint32_t j) const;

  /// The apex-to-apex path joining stored paths j and j+1, or nullopt when they
  /// already share a node.
  std::optional<TreePath> connector_path(Vertex i, std::uint32_t j) const;

  /// Vertex owning the store path with index h.
  Vertex owner_of_store_path(std::uint32_t h) const;

  bool adjacent(Vertex i, Vertex j, QueryStats* stats = nullptr) const;
  std::vector<Vertex> neighbourhood(Vertex i, QueryStats* stats = nullptr) const;
  std::uint32_t degree(Vertex i, QueryStats* stats = nullptr) const {
    return static_cast<std::uint32_t>(neighbourhood(i, stats).size());
  }

  /// Vertices whose first-path apex is `bucket` and whose last-path apex lies
  /// in [lo, hi], ascending by that apex (two binary searches plus a scan).
  std::vector<Vertex> records_in_bucket(Label bucket, Label lo, Label hi) const;

  SpaceReport space_report() const;

  void set_walk_bound(WalkBound b) { walk_bound_ = b; }
  WalkBound walk_bound() const { return walk_bound_; }

  std::vector<std::uint8_t> serialize() const;
  static EncodedGraph deserialize(const std::vector<std::uint8_t>& bytes);

 private:
  Vertex check(Vertex i) const {
    if (i < 1 || i > n_) throw std::out_of_range("EncodedGraph: vertex index out of range");
    return i;
  }

  std::uint32_t n_ = 0;
  std::uint32_t k_ = 0;
  OddMode mode_ = OddMode::kRootPair;
  WalkBound walk_bound_ = WalkBound::kApexSubtreeEnd;

  std::unique_ptr<PreparedTree> tree_;
  PathGraphStore store_;
  PackedIntArray path_counts_;     // k_i per vertex
  MonotoneSequence first_pos_;     // grouped-order position of each first path
  MonotoneSequence owner_;         // owning vertex of each non-first grouped position
  IndexPermutation perm_;          // non-first grouped position -> rank among non-first store slots
  BitVector conn_flags_;           // n rows of (ceil(k/2) - 1) connector bits
  BitVector first_flags_;          // store order: marks first paths
  PackedIntArray rec_r_, rec_s_;   // apex records, grouped by first-path apex, sorted by s
  MonotoneSequence bucket_off_;    // record-arena offsets per tree node + 1
  PackedIntArray internal_of_orig_, orig_of_internal_;
  std::uint32_t conn_row_ = 0;     // connector bits per vertex row
};

}  // namespace chordal
