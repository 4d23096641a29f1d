#include "chordal/permutation.hpp"

namespace chordal {

IndexPermutation::IndexPermutation(const std::vector<std::uint64_t>& mapping)
    : n_(mapping.size()) {
  unsigned width = bits_for(n_ > 0 ? n_ - 1 : 0);
  fwd_ = PackedIntArray(std::max<std::size_t>(n_, 1), width);
  std::vector<bool> seen(n_ + 1, false);
  for (std::size_t i = 0; i < n_; ++i) {
    std::uint64_t v = mapping[i];
    if (v < 1 || v > n_ || seen[v]) throw std::invalid_argument("IndexPermutation: not a bijection");
    seen[v] = true;
    fwd_.set(i, v - 1);
  }

  // Mark every stride-th position along each cycle; a mark stores the position
  // stride steps earlier, so an inverse walk needs at most ~2*stride steps.
  std::uint64_t stride = std::max<std::uint64_t>(2, ceil_log2(n_ + 1));
  std::vector<bool> visited(n_ + 1, false);
  std::vector<bool> marked(n_ + 1, false);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> shortcut_at;  // (position, target)
  for (std::uint64_t start = 1; start <= n_; ++start) {
    if (visited[start]) continue;
    std::vector<std::uint64_t> cycle;
    std::uint64_t cur = start;
    do {
      visited[cur] = true;
      cycle.push_back(cur);
      cur = fwd_.get(cur - 1) + 1;
    } while (cur != start);
    std::uint64_t len = cycle.size();
    if (len <= stride) continue;
    for (std::uint64_t idx = 0; idx < len; idx += stride) {
      marked[cycle[idx]] = true;
      shortcut_at.emplace_back(cycle[idx], cycle[(idx + len - stride) % len]);
    }
  }

  std::vector<bool> markbits(n_);
  for (std::uint64_t i = 1; i <= n_; ++i) markbits[i - 1] = marked[i];
  marks_ = BitVector(markbits);
  std::sort(shortcut_at.begin(), shortcut_at.end());
  shortcuts_ = PackedIntArray(std::max<std::size_t>(shortcut_at.size(), 1), width);
  for (std::size_t r = 0; r < shortcut_at.size(); ++r)
    shortcuts_.set(r, shortcut_at[r].second - 1);
}

std::uint64_t IndexPermutation::invert(std::uint64_t j) const {
  if (j < 1 || j > n_) throw std::out_of_range("IndexPermutation::invert: value out of range");
  std::uint64_t cur = j;
  bool jumped = false;
  while (fwd_.get(cur - 1) + 1 != j) {
    if (!jumped && marks_.bit(cur)) {
      cur = shortcuts_.get(marks_.rank(true, cur) - 1) + 1;
      jumped = true;
    } else {
      cur = fwd_.get(cur - 1) + 1;
    }
  }
  return cur;
}

void IndexPermutation::serialize(ByteWriter& w) const {
  w.tag("CPM1");
  w.u64(n_);
  w.packed(fwd_);
  marks_.serialize(w);
  w.packed(shortcuts_);
}

IndexPermutation IndexPermutation::deserialize(ByteReader& r) {
  r.expect_tag("CPM1");
  IndexPermutation p;
  p.n_ = r.u64();
  p.fwd_ = r.packed();
  p.marks_ = BitVector::deserialize(r);
  p.shortcuts_ = r.packed();
  if (p.marks_.size() != p.n_) throw FormatError("permutation: mark length mismatch");
  return p;
}

}  // namespace chordal
