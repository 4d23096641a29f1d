#pragma once

#include "chordal/bits.hpp"

namespace chordal {

/// Static bit vector with constant-time rank and sampled select, 1-based positions.
/// rank(b, i) counts occurrences of b in positions 1..i; select(b, i) returns the
/// position of the i-th b, or 0 when there are fewer than i occurrences.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(const std::vector<bool>& bits);
  BitVector(std::vector<std::uint64_t> words, std::uint64_t nbits);

  std::uint64_t size() const { return n_; }

  bool bit(std::uint64_t i) const {  // 1-based
    if (i < 1 || i > n_) throw std::out_of_range("BitVector::bit: position out of range");
    return (words_[(i - 1) >> 6] >> ((i - 1) & 63)) & 1;
  }

  std::uint64_t rank(bool b, std::uint64_t i) const {
    if (i > n_) throw std::out_of_range("BitVector::rank: position out of range");
    std::uint64_t r1 = rank1(i);
    return b ? r1 : i - r1;
  }

  std::uint64_t select(bool b, std::uint64_t i) const;

  std::uint64_t ones() const { return ones_; }
  std::uint64_t zeros() const { return n_ - ones_; }

  /// Exact size of the stored bits plus the rank/select directory, in bits.
  std::uint64_t bits() const;

  void serialize(ByteWriter& w) const;
  static BitVector deserialize(ByteReader& r);

  bool operator==(const BitVector& o) const { return n_ == o.n_ && words_ == o.words_; }

 private:
  static constexpr std::uint64_t kBlockBits = 512;        // u16 counts relative to superblock
  static constexpr std::uint64_t kSuperblockBits = 65536; // u64 absolute counts
  static constexpr std::uint64_t kSelectSample = 1024;    // sampled positions per symbol

  void build_index();
  std::uint64_t rank1(std::uint64_t i) const;

  std::uint64_t n_ = 0;
  std::uint64_t ones_ = 0;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint64_t> super_;   // ones before each superblock
  std::vector<std::uint16_t> block_;   // ones before each block, relative to superblock
  std::vector<std::uint32_t> sel1_;    // position of the (kSelectSample*j + 1)-th one
  std::vector<std::uint32_t> sel0_;
};

/// Incremental builder: append bits, then freeze into a BitVector.
class BitBuilder {
 public:
  void push(bool b) {
    if ((n_ & 63) == 0) words_.push_back(0);
    if (b) words_.back() |= 1ULL << (n_ & 63);
    ++n_;
  }
  void append_run(bool b, std::uint64_t count) {
    for (std::uint64_t i = 0; i < count; ++i) push(b);
  }
  BitVector build() { return BitVector(std::move(words_), n_); }

 private:
  std::uint64_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace chordal
