#include "chordal/path_graph_store.hpp"

#include <algorithm>
#include <numeric>

namespace chordal {

void PathGraphStore::check_labels(Label s, Label t) const {
  Label n = tree_->node_count();
  if (s < 1 || s > n || t < 1 || t > n)
    throw std::out_of_range("PathGraphStore: endpoint label out of range");
}

PathGraphStoreBuild PathGraphStore::build(const PreparedTree& tree,
                                            const std::vector<TreePath>& paths) {
  PathGraphStoreBuild b;
  PathGraphStore& st = b.store;
  st.tree_ = &tree;
  st.m_ = static_cast<std::uint32_t>(paths.size());
  for (const auto& p : paths) {
    st.check_labels(p.s, p.t);
    if (p.s > p.t) throw std::invalid_argument("PathGraphStore: path not normalized");
  }

  std::vector<std::uint32_t> order(paths.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t c) {
    return paths[a] < paths[c];  // (start, end), ties keep insertion order
  });
  b.store_index_of_input.assign(paths.size(), 0);
  for (std::uint32_t pos = 0; pos < order.size(); ++pos)
    b.store_index_of_input[order[pos]] = pos + 1;

  std::vector<std::uint64_t> starts;
  starts.reserve(paths.size());
  unsigned wid = bits_for(tree.node_count() > 0 ? tree.node_count() - 1 : 0);
  st.ends_ = PackedIntArray(std::max<std::size_t>(paths.size(), 1), wid);
  for (std::uint32_t pos = 0; pos < order.size(); ++pos) {
    starts.push_back(paths[order[pos]].s);
    st.ends_.set(pos, paths[order[pos]].t - 1);
  }
  st.starts_ = MonotoneSequence(starts);
  st.build_index();
  return b;
}

void PathGraphStore::build_index() {
  const PreparedTree& tree = *tree_;
  apex_keys_.clear();
  apex_ids_.clear();
  group_heads_.clear();
  group_off_.clear();
  ent_top_.clear();
  ent_bot_.clear();
  ent_id_.clear();
  tree_off_.clear();
  stab_size_.clear();
  stab_max_.clear();

  struct Ent {
    Label head, top, bot;
    std::uint32_t id;
  };
  std::vector<Ent> ents;
  std::vector<std::pair<Label, std::uint32_t>> apexes;
  for (std::uint32_t u = 1; u <= m_; ++u) {
    TreePath p = path_endpoints(u);
    apexes.emplace_back(tree.lca(p.s, p.t), u);
    for (auto [top, bot] : tree.path_segments(p.s, p.t))
      ents.push_back({tree.heavy_path_start(top), top, bot, u});
  }

  std::sort(apexes.begin(), apexes.end());
  for (auto [a, u] : apexes) {
    apex_keys_.push_back(a);
    apex_ids_.push_back(u);
  }

  std::sort(ents.begin(), ents.end(), [](const Ent& a, const Ent& b) {
    return std::tie(a.head, a.top, a.bot, a.id) < std::tie(b.head, b.top, b.bot, b.id);
  });
  for (std::size_t i = 0; i < ents.size(); ++i) {
    if (i == 0 || ents[i].head != ents[i - 1].head) {
      group_heads_.push_back(ents[i].head);
      group_off_.push_back(static_cast<std::uint32_t>(i));
    }
    ent_top_.push_back(ents[i].top);
    ent_bot_.push_back(ents[i].bot);
    ent_id_.push_back(ents[i].id);
  }
  group_off_.push_back(static_cast<std::uint32_t>(ents.size()));

  // max-bottom tree per group, leaves padded to a power of two
  for (std::size_t g = 0; g < group_heads_.size(); ++g) {
    std::uint32_t lo = group_off_[g], hi = group_off_[g + 1];
    std::uint32_t sz = std::bit_ceil(hi - lo);
    tree_off_.push_back(static_cast<std::uint32_t>(stab_max_.size()));
    stab_size_.push_back(sz);
    std::size_t base = stab_max_.size();
    stab_max_.resize(base + 2 * sz, 0);
    for (std::uint32_t i = 0; i < hi - lo; ++i) stab_max_[base + sz + i] = ent_bot_[lo + i];
    for (std::uint32_t i = sz - 1; i >= 1; --i)
      stab_max_[base + i] = std::max(stab_max_[base + 2 * i], stab_max_[base + 2 * i + 1]);
  }
}

bool PathGraphStore::paths_intersect(const TreePath& p, const TreePath& q,
                                     StoreProbeStats* stats) const {
  check_labels(p.s, p.t);
  check_labels(q.s, q.t);
  const PreparedTree& tree = *tree_;
  if (stats) stats->predicate_calls += 4;  // two lca calls, two on-path tests
  Label pa = tree.lca(p.s, p.t);
  Label qa = tree.lca(q.s, q.t);
  return tree.on_path(qa, p.s, p.t) || tree.on_path(pa, q.s, q.t);
}

std::vector<std::uint32_t> PathGraphStore::intersecting_paths(Label s, Label t,
                                                              StoreProbeStats* stats) const {
  check_labels(s, t);
  const PreparedTree& tree = *tree_;
  std::vector<std::uint32_t> out;

  // stored paths whose apex lies on the query path
  auto segs = tree.path_segments(s, t);
  if (stats) stats->segments_visited += segs.size();
  for (auto [lo, hi] : segs) {
    auto first = std::lower_bound(apex_keys_.begin(), apex_keys_.end(), lo);
    auto last = std::upper_bound(apex_keys_.begin(), apex_keys_.end(), hi);
    if (stats) stats->index_probes += 2 * (ceil_log2(apex_keys_.size() + 1) + 1);
    for (auto it = first; it != last; ++it)
      out.push_back(apex_ids_[static_cast<std::size_t>(it - apex_keys_.begin())]);
  }

  // stored paths passing through the query apex: stab the apex's heavy path
  Label g = tree.lca(s, t);
  Label head = tree.heavy_path_start(g);
  auto git = std::lower_bound(group_heads_.begin(), group_heads_.end(), head);
  if (stats) stats->index_probes += ceil_log2(group_heads_.size() + 1) + 1;
  if (git != group_heads_.end() && *git == head) {
    std::size_t grp = static_cast<std::size_t>(git - group_heads_.begin());
    std::uint32_t lo = group_off_[grp], hi = group_off_[grp + 1];
    // entries with top <= g form a prefix; among them report bot >= g
    std::uint32_t prefix = static_cast<std::uint32_t>(
        std::upper_bound(ent_top_.begin() + lo, ent_top_.begin() + hi, g) -
        (ent_top_.begin() + lo));
    if (stats) stats->index_probes += ceil_log2(hi - lo + 1) + 1;
    std::uint32_t sz = stab_size_[grp];
    std::uint32_t base = tree_off_[grp];
    // iterative descent over the implicit max tree
    std::vector<std::uint32_t> nodes;
    if (prefix > 0) nodes.push_back(1);
    while (!nodes.empty()) {
      std::uint32_t nd = nodes.back();
      nodes.pop_back();
      if (stats) ++stats->index_probes;
      std::uint32_t width = sz >> (floor_log2(nd));
      std::uint32_t left = (nd - (1u << floor_log2(nd))) * width;  // leaf span [left, left+width)
      if (left >= prefix || stab_max_[base + nd] < g) continue;
      if (width == 1) {
        out.push_back(ent_id_[lo + left]);
        continue;
      }
      nodes.push_back(2 * nd);
      nodes.push_back(2 * nd + 1);
    }
  }

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (stats) stats->reported += out.size();
  return out;
}

void PathGraphStore::serialize(ByteWriter& w) const {
  w.tag("CPG1");
  w.u32(m_);
  starts_.serialize(w);
  w.packed(ends_);
}

PathGraphStore PathGraphStore::deserialize(ByteReader& r, const PreparedTree& tree) {
  r.expect_tag("CPG1");
  PathGraphStore st;
  st.tree_ = &tree;
  st.m_ = r.u32();
  st.starts_ = MonotoneSequence::deserialize(r);
  st.ends_ = r.packed();
  if (st.starts_.size() != st.m_) throw FormatError("path store: start count mismatch");
  for (std::uint32_t u = 1; u <= st.m_; ++u) {
    TreePath p = st.path_endpoints(u);  // validates label ranges via check below
    st.check_labels(p.s, p.t);
    if (p.s > p.t) throw FormatError("path store: endpoints not normalized");
  }
  st.build_index();
  return st;
}

}  // namespace chordal
