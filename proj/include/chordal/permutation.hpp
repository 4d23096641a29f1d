#pragma once

#include "chordal/bitvector.hpp"

namespace chordal {

/// Permutation of 1..n with forward lookup in O(1) and inverse lookup bounded by
/// roughly 2*ceil(log2 n) steps via cycle shortcuts sampled at that stride.
class IndexPermutation {
 public:
  IndexPermutation() = default;
  explicit IndexPermutation(const std::vector<std::uint64_t>& mapping);

  std::uint64_t apply(std::uint64_t i) const {
    if (i < 1 || i > n_) throw std::out_of_range("IndexPermutation::apply: index out of range");
    return fwd_.get(i - 1) + 1;
  }

  std::uint64_t invert(std::uint64_t j) const;

  std::uint64_t size() const { return n_; }
  std::uint64_t bits() const { return fwd_.bits() + marks_.bits() + shortcuts_.bits(); }

  void serialize(ByteWriter& w) const;
  static IndexPermutation deserialize(ByteReader& r);

 private:
  std::uint64_t n_ = 0;
  PackedIntArray fwd_;       // pi(i) - 1
  BitVector marks_;          // sampled positions along cycles
  PackedIntArray shortcuts_; // for the r-th mark: the position stride steps earlier in its cycle
};

}  // namespace chordal
