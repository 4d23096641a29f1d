#pragma once

#include "chordal/bitvector.hpp"

namespace chordal {

/// Non-decreasing integer sequence stored as a unary differential bit stream:
/// a_1 ones, a 0, then a_i - a_{i-1} ones and a 0 for each following element.
/// at(i) = rank(1, select(0, i)), 1-based. Values may start at 0.
class MonotoneSequence {
 public:
  MonotoneSequence() = default;
  explicit MonotoneSequence(const std::vector<std::uint64_t>& values);

  std::uint64_t at(std::uint64_t i) const {
    if (i < 1 || i > n_) throw std::out_of_range("MonotoneSequence::at: index out of range");
    return stream_.rank(true, stream_.select(false, i));
  }

  std::uint64_t size() const { return n_; }
  std::uint64_t bits() const { return stream_.bits(); }

  void serialize(ByteWriter& w) const;
  static MonotoneSequence deserialize(ByteReader& r);

  bool operator==(const MonotoneSequence& o) const {
    return n_ == o.n_ && stream_ == o.stream_;
  }

 private:
  std::uint64_t n_ = 0;
  BitVector stream_;
};

}  // namespace chordal
