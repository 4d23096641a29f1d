#include "chordal/prepared_tree.hpp"

#include <algorithm>

namespace chordal {

PreparedTree PreparedTree::build(const std::vector<Label>& parents_by_orig, Label root_orig) {
  Label n = static_cast<Label>(parents_by_orig.size());
  if (n == 0) throw ModelError("tree: empty node list");
  if (root_orig < 1 || root_orig > n) throw ModelError("tree: root id out of range");

  std::vector<std::vector<Label>> kids(n + 1);
  Label roots = 0;
  for (Label v = 1; v <= n; ++v) {
    Label p = parents_by_orig[v - 1];
    if (p == 0) {
      ++roots;
      if (v != root_orig) throw ModelError("tree: node " + std::to_string(v) + " has no parent but is not the root");
      continue;
    }
    if (p > n) throw ModelError("tree: parent id out of range for node " + std::to_string(v));
    kids[p].push_back(v);
  }
  if (roots != 1) throw ModelError("tree: expected exactly one root entry");

  // subtree sizes by original id; also detects cycles/disconnection (visit count < n)
  std::vector<Label> size_orig(n + 1, 0);
  std::vector<Label> order;
  order.reserve(n);
  order.push_back(root_orig);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Label c : kids[order[i]]) order.push_back(c);
  if (order.size() != n) throw ModelError("tree: not connected (cycle or forest)");
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    size_orig[*it] = 1;
    for (Label c : kids[*it]) size_orig[*it] += size_orig[c];
  }

  // heavy child first (max subtree size, ties to the smallest original id),
  // light children in original-id order
  for (Label v = 1; v <= n; ++v) {
    auto& ks = kids[v];
    if (ks.empty()) continue;
    std::sort(ks.begin(), ks.end());
    auto heavy = std::max_element(ks.begin(), ks.end(), [&](Label a, Label b) {
      return size_orig[a] < size_orig[b];  // stable: first max wins, i.e. smallest id
    });
    std::rotate(ks.begin(), heavy, heavy + 1);
  }

  PreparedTree t;
  t.n_ = n;
  t.parent_.assign(n, 0);
  t.depth_.assign(n, 0);
  t.orig_of_label_.assign(n, 0);
  t.label_of_orig_.assign(n, 0);
  t.child_off_.assign(n + 1, 0);
  t.child_arr_.assign(n - 1 + 1, 0);
  t.child_arr_.resize(n > 0 ? n - 1 : 0);

  // preorder labelling, iterative
  Label next = 0;
  std::vector<std::pair<Label, std::size_t>> stack;  // (orig node, next child idx)
  stack.emplace_back(root_orig, 0);
  t.label_of_orig_[root_orig - 1] = ++next;
  t.orig_of_label_[next - 1] = root_orig;
  while (!stack.empty()) {
    auto& [v, ci] = stack.back();
    if (ci == kids[v].size()) {
      stack.pop_back();
      continue;
    }
    Label c = kids[v][ci++];
    t.label_of_orig_[c - 1] = ++next;
    t.orig_of_label_[next - 1] = c;
    Label vl = t.label_of_orig_[v - 1];
    t.parent_[next - 1] = vl;
    t.depth_[next - 1] = t.depth_[vl - 1] + 1;
    stack.emplace_back(c, 0);
  }

  // children in label space (labels of ordered children are increasing per node)
  for (Label l = 2; l <= n; ++l) t.child_off_[t.parent_[l - 1]]++;
  for (Label v = 1; v <= n; ++v) t.child_off_[v] += t.child_off_[v - 1];
  std::vector<std::uint32_t> fill(n, 0);
  for (Label l = 2; l <= n; ++l) {
    Label p = t.parent_[l - 1];
    t.child_arr_[t.child_off_[p - 1] + fill[p - 1]++] = l;
  }

  t.derive_from_structure();
  return t;
}

void PreparedTree::derive_from_structure() {
  size_.assign(n_, 1);
  for (Label l = n_; l >= 2; --l) size_[parent_[l - 1] - 1] += size_[l - 1];
  head_.assign(n_, 0);
  head_[0] = 1;
  for (Label l = 2; l <= n_; ++l) {
    Label p = parent_[l - 1];
    head_[l - 1] = (l == p + 1) ? head_[p - 1] : l;  // first child is label p+1
  }

  // balanced parentheses: '(' = 1 at preorder entry, ')' = 0 at exit
  BitBuilder bp;
  std::vector<std::pair<Label, std::uint32_t>> stack;
  stack.emplace_back(1, 0);
  bp.push(true);
  while (!stack.empty()) {
    auto& [v, ci] = stack.back();
    Label c = child(v, ci + 1);
    if (c == kNone) {
      bp.push(false);
      stack.pop_back();
      continue;
    }
    ++ci;
    bp.push(true);
    stack.emplace_back(c, 0);
  }
  bp_ = bp.build();
}

Label PreparedTree::lca(Label a, Label b) const {
  check(a);
  check(b);
  while (head_[a - 1] != head_[b - 1]) {
    if (depth_[head_[a - 1] - 1] > depth_[head_[b - 1] - 1])
      a = parent_[head_[a - 1] - 1];
    else
      b = parent_[head_[b - 1] - 1];
  }
  return a < b ? a : b;  // same heavy path: smaller label is shallower
}

std::vector<std::pair<Label, Label>> PreparedTree::path_segments(Label a, Label b) const {
  Label apex = lca(a, b);
  std::vector<std::pair<Label, Label>> segs;
  Label tails[2] = {kNone, kNone};  // deepest node reached on the apex heavy path per leg
  Label ends[2] = {a, b};
  for (int leg = 0; leg < 2; ++leg) {
    Label cur = ends[leg];
    while (head_[cur - 1] != head_[apex - 1]) {
      segs.emplace_back(head_[cur - 1], cur);
      cur = parent_[head_[cur - 1] - 1];
    }
    tails[leg] = cur;
  }
  segs.emplace_back(apex, std::max(tails[0], tails[1]));
  return segs;
}

std::vector<Label> PreparedTree::path_nodes(Label a, Label b) const {
  std::vector<Label> nodes;
  for (auto [lo, hi] : path_segments(a, b))
    for (Label v = lo; v <= hi; ++v) nodes.push_back(v);
  return nodes;
}

void PreparedTree::serialize(ByteWriter& w) const {
  w.tag("CTR1");
  w.u64(n_);
  bp_.serialize(w);
}

PreparedTree PreparedTree::deserialize(ByteReader& r) {
  r.expect_tag("CTR1");
  PreparedTree t;
  t.n_ = static_cast<Label>(r.u64());
  BitVector bp = BitVector::deserialize(r);
  if (bp.size() != 2 * static_cast<std::uint64_t>(t.n_) || t.n_ == 0)
    throw FormatError("tree: balanced parentheses length mismatch");

  t.parent_.assign(t.n_, 0);
  t.depth_.assign(t.n_, 0);
  t.child_off_.assign(t.n_ + 1, 0);
  t.child_arr_.assign(t.n_ - 1, 0);
  // labels are preorder ranks, so '(' number i opens node i
  std::vector<Label> stack;
  Label next = 0;
  for (std::uint64_t i = 1; i <= bp.size(); ++i) {
    if (bp.bit(i)) {
      Label v = ++next;
      if (!stack.empty()) {
        t.parent_[v - 1] = stack.back();
        t.depth_[v - 1] = t.depth_[stack.back() - 1] + 1;
      }
      stack.push_back(v);
    } else {
      if (stack.empty()) throw FormatError("tree: unbalanced parentheses");
      stack.pop_back();
    }
  }
  if (!stack.empty() || next != t.n_) throw FormatError("tree: unbalanced parentheses");

  for (Label l = 2; l <= t.n_; ++l) t.child_off_[t.parent_[l - 1]]++;
  for (Label v = 1; v <= t.n_; ++v) t.child_off_[v] += t.child_off_[v - 1];
  std::vector<std::uint32_t> fill(t.n_, 0);
  for (Label l = 2; l <= t.n_; ++l) {
    Label p = t.parent_[l - 1];
    t.child_arr_[t.child_off_[p - 1] + fill[p - 1]++] = l;
  }

  // identity original-id mapping: the mapping is a build-time artifact and is
  // not part of the stored form
  t.orig_of_label_.resize(t.n_);
  t.label_of_orig_.resize(t.n_);
  for (Label v = 1; v <= t.n_; ++v) t.orig_of_label_[v - 1] = t.label_of_orig_[v - 1] = v;

  t.derive_from_structure();
  return t;
}

}  // namespace chordal
