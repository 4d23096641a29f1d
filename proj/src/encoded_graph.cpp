#include "chordal/encoded_graph.hpp"

#include <algorithm>
#include <numeric>

namespace chordal {

EncodedGraph EncodedGraph::build(const TreeModel& m, OddMode mode) {
  TreeModel work = (mode == OddMode::kAugment) ? normalize_even_leaves(m) : m;
  work.validate();

  EncodedGraph g;
  g.mode_ = mode;
  g.n_ = work.vertex_count();
  g.k_ = work.k;
  g.tree_ = std::make_unique<PreparedTree>(PreparedTree::build(work.parents, work.root));
  const PreparedTree& tree = *g.tree_;

  PathDecomposition decomp = decompose_model(tree, work);

  // vertex order: first stored path's (start, end), ties by input numbering
  std::vector<std::uint32_t> order(g.n_);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return decomp.paths[a][0] < decomp.paths[b][0];
  });

  unsigned vwid = bits_for(g.n_ - 1);
  g.internal_of_orig_ = PackedIntArray(g.n_, vwid);
  g.orig_of_internal_ = PackedIntArray(g.n_, vwid);
  for (std::uint32_t pos = 0; pos < g.n_; ++pos) {
    g.orig_of_internal_.set(pos, order[pos]);
    g.internal_of_orig_.set(order[pos], pos);
  }

  // grouped path order: each vertex's paths consecutively, vertices in order
  std::vector<TreePath> grouped;
  std::vector<std::uint64_t> first_pos;
  std::vector<std::uint64_t> owners;  // per non-first grouped position
  std::vector<bool> is_first;
  g.path_counts_ = PackedIntArray(g.n_, std::max(1u, ceil_log2(g.k_)));
  g.conn_row_ = (g.k_ + 1) / 2 - 1;
  std::vector<bool> conn_bits(static_cast<std::size_t>(g.n_) * g.conn_row_, false);
  for (std::uint32_t pos = 0; pos < g.n_; ++pos) {
    const auto& paths = decomp.paths[order[pos]];
    const auto& flags = decomp.flags[order[pos]];
    g.path_counts_.set(pos, paths.size());
    first_pos.push_back(grouped.size() + 1);
    for (std::size_t j = 0; j < paths.size(); ++j) {
      grouped.push_back(paths[j]);
      is_first.push_back(j == 0);
      if (j > 0) owners.push_back(pos + 1);
    }
    for (std::size_t j = 0; j < flags.size(); ++j)
      if (flags[j]) conn_bits[static_cast<std::size_t>(pos) * g.conn_row_ + j] = true;
  }
  g.first_pos_ = MonotoneSequence(first_pos);
  g.owner_ = MonotoneSequence(owners);
  g.conn_flags_ = BitVector(conn_bits);

  auto sb = PathGraphStore::build(tree, grouped);
  g.store_ = std::move(sb.store);

  std::vector<bool> ff(grouped.size(), false);
  for (std::size_t gp = 0; gp < grouped.size(); ++gp)
    if (is_first[gp]) ff[sb.store_index_of_input[gp] - 1] = true;
  g.first_flags_ = BitVector(ff);

  // first paths keep their relative order in the store, so a flag bitvector
  // recovers their store indices; guard the assumption once at build time
  for (std::uint32_t i = 1; i <= g.n_; ++i) {
    std::uint64_t gp = first_pos[i - 1];
    if (g.first_flags_.select(true, i) != sb.store_index_of_input[gp - 1])
      throw std::logic_error("EncodedGraph: first-path order mismatch");
  }

  std::vector<std::uint64_t> sigma;
  sigma.reserve(grouped.size() - g.n_);
  for (std::size_t gp = 0; gp < grouped.size(); ++gp)
    if (!is_first[gp])
      sigma.push_back(g.first_flags_.rank(false, sb.store_index_of_input[gp]));
  g.perm_ = IndexPermutation(sigma);

  // apex records: bucket by first-path apex, value = the deepest stored-path
  // apex. Stored-path apexes descend along the enclosure chain, so the deepest
  // one is the largest label; for an even leaf count that is the last path's
  // apex, while the appended apex path of an odd count would point back at the
  // top and make the record invisible to the upward walk.
  struct Rec {
    Label bucket, s;
    Vertex r;
  };
  std::vector<Rec> recs;
  recs.reserve(g.n_);
  for (std::uint32_t pos = 0; pos < g.n_; ++pos) {
    const auto& paths = decomp.paths[order[pos]];
    Label deepest = 0;
    for (const auto& p : paths) deepest = std::max(deepest, apex_of(tree, p));
    recs.push_back({apex_of(tree, paths.front()), deepest, static_cast<Vertex>(pos + 1)});
  }
  std::sort(recs.begin(), recs.end(), [](const Rec& a, const Rec& b) {
    return std::tie(a.bucket, a.s, a.r) < std::tie(b.bucket, b.s, b.r);
  });
  g.rec_r_ = PackedIntArray(g.n_, vwid);
  g.rec_s_ = PackedIntArray(g.n_, bits_for(tree.node_count() - 1));
  std::vector<std::uint64_t> offs(tree.node_count() + 1, 0);
  for (std::size_t idx = 0; idx < recs.size(); ++idx) {
    g.rec_r_.set(idx, recs[idx].r - 1);
    g.rec_s_.set(idx, recs[idx].s - 1);
  }
  {
    std::size_t idx = 0;
    for (Label b = 1; b <= tree.node_count() + 1; ++b) {
      while (idx < recs.size() && recs[idx].bucket < b) ++idx;
      offs[b - 1] = idx;
    }
  }
  g.bucket_off_ = MonotoneSequence(offs);

  return g;
}

std::uint32_t EncodedGraph::stored_path_store_index(Vertex i, std::uint32_t j) const {
  std::uint32_t kc = stored_path_count(i);
  if (j < 1 || j > kc) throw std::out_of_range("EncodedGraph: stored path ordinal out of range");
  if (j == 1) return first_path_store_index(i);
  std::uint64_t p = first_path_pos(i) - i + (j - 1);  // rank among non-first grouped positions
  return static_cast<std::uint32_t>(first_flags_.select(false, perm_.apply(p)));
}

std::vector<std::uint32_t> EncodedGraph::extra_path_store_indices(Vertex i) const {
  std::uint32_t kc = stored_path_count(i);
  std::vector<std::uint32_t> out;
  out.reserve(kc - 1);
  std::uint64_t p = first_path_pos(i) - i + 1;
  for (std::uint32_t j = 0; j + 1 < kc; ++j)
    out.push_back(static_cast<std::uint32_t>(first_flags_.select(false, perm_.apply(p + j))));
  return out;
}

bool EncodedGraph::is_connector(Vertex i, std::uint32_t j) const {
  std::uint32_t kc = stored_path_count(i);
  if (j < 1 || j + 1 > kc) throw std::out_of_range("EncodedGraph: connector ordinal out of range");
  return conn_flags_.bit(static_cast<std::uint64_t>(check(i) - 1) * conn_row_ + j);
}

std::optional<TreePath> EncodedGraph::connector_path(Vertex i, std::uint32_t j) const {
  if (!is_connector(i, j)) return std::nullopt;
  TreePath a = store_.path_endpoints(stored_path_store_index(i, j));
  TreePath b = store_.path_endpoints(stored_path_store_index(i, j + 1));
  return TreePath::make(apex_of(*tree_, a), apex_of(*tree_, b));
}

Vertex EncodedGraph::owner_of_store_path(std::uint32_t h) const {
  if (h < 1 || h > store_.size()) throw std::out_of_range("EncodedGraph: store index out of range");
  if (first_flags_.bit(h)) return static_cast<Vertex>(first_flags_.rank(true, h));
  std::uint64_t p = perm_.invert(first_flags_.rank(false, h));
  return static_cast<Vertex>(owner_.at(p));
}

bool EncodedGraph::adjacent(Vertex i, Vertex j, QueryStats* stats) const {
  check(i);
  check(j);
  if (i == j) throw std::invalid_argument("EncodedGraph::adjacent: equal vertices");
  auto probe_intersect = [&](const TreePath& a, const TreePath& b) {
    if (stats) ++stats->store_probes;
    return store_.paths_intersect(a, b, stats ? &stats->store : nullptr);
  };

  TreePath p1i = store_.path_endpoints(first_path_store_index(i));
  TreePath p1j = store_.path_endpoints(first_path_store_index(j));
  if (probe_intersect(p1i, p1j)) return true;

  Vertex enclosing = 0;
  if (encloses(p1i, p1j)) enclosing = i;
  else if (encloses(p1j, p1i)) enclosing = j;
  if (enclosing == 0) return false;

  Vertex other = enclosing == i ? j : i;
  TreePath target = enclosing == i ? p1j : p1i;
  (void)other;
  for (std::uint32_t h : extra_path_store_indices(enclosing))
    if (probe_intersect(store_.path_endpoints(h), target)) return true;
  std::uint32_t kc = stored_path_count(enclosing);
  for (std::uint32_t t = 1; t + 1 <= kc; ++t) {
    if (stats) ++stats->store_probes;  // connector evaluation
    auto cp = connector_path(enclosing, t);
    if (cp && probe_intersect(*cp, target)) return true;
  }
  return false;
}

std::vector<Vertex> EncodedGraph::neighbourhood(Vertex i, QueryStats* stats) const {
  check(i);
  std::vector<bool> seen(n_ + 1, false);
  seen[i] = true;
  std::vector<Vertex> out;

  std::uint32_t kc = stored_path_count(i);
  std::vector<TreePath> probes;
  probes.reserve(2 * kc);
  for (std::uint32_t j = 1; j <= kc; ++j)
    probes.push_back(store_.path_endpoints(stored_path_store_index(i, j)));
  TreePath first = probes.front();
  for (std::uint32_t j = 1; j + 1 <= kc; ++j)
    if (auto cp = connector_path(i, j)) probes.push_back(*cp);

  for (const TreePath& p : probes) {
    for (std::uint32_t h : store_.intersecting_paths(p.s, p.t, stats ? &stats->store : nullptr)) {
      Vertex v = owner_of_store_path(h);
      if (!seen[v]) {
        seen[v] = true;
        out.push_back(v);
      }
    }
  }

  // climb the root path one heavy-path segment at a time and sweep the records
  // of every strict-ancestor bucket on the segment; a record whose deepest apex
  // falls inside this vertex's apex subtree marks a structure whose connector
  // chain crosses the apex, the contact the store sweep cannot see
  Label apex = tree_->lca(first.s, first.t);
  Label hi = walk_bound_ == WalkBound::kApexSubtreeEnd ? tree_->subtree_end(apex) : first.t;
  Label cur = apex;
  bool own_segment = true;
  while (cur != kNone) {
    if (stats) ++stats->walk_iterations;
    Label head = tree_->heavy_path_start(cur);
    Label top = head, bottom = own_segment ? cur - 1 : cur;  // strict ancestors only
    if (bottom != kNone && top <= bottom) {
      std::uint64_t b0 = bucket_off_.at(top);
      std::uint64_t b1 = bucket_off_.at(bottom + 1);
      for (std::uint64_t idx = b0; idx < b1; ++idx) {
        Label s = static_cast<Label>(rec_s_.get(idx) + 1);
        if (s < apex || s > hi) continue;
        Vertex r = static_cast<Vertex>(rec_r_.get(idx) + 1);
        if (!seen[r]) {
          seen[r] = true;
          out.push_back(r);
        }
      }
    }
    cur = tree_->parent(head);
    own_segment = false;
  }

  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vertex> EncodedGraph::records_in_bucket(Label bucket, Label lo, Label hi) const {
  if (bucket < 1 || bucket > tree_->node_count())
    throw std::out_of_range("EncodedGraph: bucket label out of range");
  std::uint64_t b0 = bucket_off_.at(bucket);
  std::uint64_t b1 = bucket_off_.at(bucket + 1);
  // binary search the s-sorted slice for [lo, hi]
  auto s_at = [&](std::uint64_t idx) { return static_cast<Label>(rec_s_.get(idx) + 1); };
  std::uint64_t first = b0, last = b1;
  {
    std::uint64_t a = b0, b = b1;
    while (a < b) {
      std::uint64_t mid = (a + b) / 2;
      if (s_at(mid) < lo) a = mid + 1;
      else b = mid;
    }
    first = a;
    a = first;
    b = b1;
    while (a < b) {
      std::uint64_t mid = (a + b) / 2;
      if (s_at(mid) <= hi) a = mid + 1;
      else b = mid;
    }
    last = a;
  }
  std::vector<Vertex> out;
  out.reserve(last - first);
  for (std::uint64_t idx = first; idx < last; ++idx)
    out.push_back(static_cast<Vertex>(rec_r_.get(idx) + 1));
  return out;
}

SpaceReport EncodedGraph::space_report() const {
  SpaceReport r;
  r.n = n_;
  r.k = k_;
  r.tree_nodes = tree_->node_count();
  r.stored_paths = store_.size();
  r.tree_bits = tree_->bits();
  r.store_endpoint_bits = store_.endpoint_bits();
  r.path_count_bits = path_counts_.bits();
  r.first_pos_bits = first_pos_.bits();
  r.owner_bits = owner_.bits();
  r.perm_bits = perm_.bits();
  r.connector_flag_bits = conn_flags_.bits();
  r.first_flag_bits = first_flags_.bits();
  r.apex_record_bits = rec_r_.bits() + rec_s_.bits() + bucket_off_.bits();
  r.total_bits = r.tree_bits + r.store_endpoint_bits + r.path_count_bits + r.first_pos_bits +
                 r.owner_bits + r.perm_bits + r.connector_flag_bits + r.first_flag_bits +
                 r.apex_record_bits;
  r.reference_bits = static_cast<std::uint64_t>(k_ - 1) * n_ * std::max(1u, ceil_log2(n_));
  return r;
}

std::vector<std::uint8_t> EncodedGraph::serialize() const {
  ByteWriter w;
  w.tag("CHG1");
  w.u32(1);  // version
  w.u8(static_cast<std::uint8_t>(mode_));
  w.u32(n_);
  w.u32(k_);
  w.u32(store_.size());
  w.u32(conn_row_);
  tree_->serialize(w);
  store_.serialize(w);
  w.packed(path_counts_);
  first_pos_.serialize(w);
  owner_.serialize(w);
  perm_.serialize(w);
  conn_flags_.serialize(w);
  first_flags_.serialize(w);
  w.packed(rec_r_);
  w.packed(rec_s_);
  bucket_off_.serialize(w);
  w.packed(internal_of_orig_);
  w.packed(orig_of_internal_);
  return w.take();
}

EncodedGraph EncodedGraph::deserialize(const std::vector<std::uint8_t>& bytes) {
  ByteReader r(bytes);
  r.expect_tag("CHG1");
  if (r.u32() != 1) throw FormatError("encoded graph: unsupported version");
  EncodedGraph g;
  g.mode_ = static_cast<OddMode>(r.u8());
  g.n_ = r.u32();
  g.k_ = r.u32();
  std::uint32_t m = r.u32();
  g.conn_row_ = r.u32();
  g.tree_ = std::make_unique<PreparedTree>(PreparedTree::deserialize(r));
  g.store_ = PathGraphStore::deserialize(r, *g.tree_);
  g.path_counts_ = r.packed();
  g.first_pos_ = MonotoneSequence::deserialize(r);
  g.owner_ = MonotoneSequence::deserialize(r);
  g.perm_ = IndexPermutation::deserialize(r);
  g.conn_flags_ = BitVector::deserialize(r);
  g.first_flags_ = BitVector::deserialize(r);
  g.rec_r_ = r.packed();
  g.rec_s_ = r.packed();
  g.bucket_off_ = MonotoneSequence::deserialize(r);
  g.internal_of_orig_ = r.packed();
  g.orig_of_internal_ = r.packed();
  if (!r.done()) throw FormatError("encoded graph: trailing bytes");

  if (g.n_ == 0 || g.store_.size() != m || g.path_counts_.size() != g.n_ ||
      g.first_pos_.size() != g.n_ || g.first_flags_.size() != m ||
      g.first_flags_.rank(true, m) != g.n_ || g.owner_.size() != m - g.n_ ||
      g.perm_.size() != m - g.n_ || g.rec_r_.size() != g.n_ || g.rec_s_.size() != g.n_ ||
      g.conn_flags_.size() != static_cast<std::uint64_t>(g.n_) * g.conn_row_ ||
      g.bucket_off_.size() != g.tree_->node_count() + 1)
    throw FormatError("encoded graph: inconsistent component sizes");
  return g;
}

}  // namespace chordal
