#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

namespace chordal {

using Label = std::uint32_t;   // preorder label of a tree node, 1-based; 0 = none
using Vertex = std::uint32_t;  // graph vertex index, 1-based

inline constexpr Label kNone = 0;

struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bits needed to store values in [0, max_value].
inline unsigned bits_for(std::uint64_t max_value) {
  return max_value == 0 ? 1u : static_cast<unsigned>(std::bit_width(max_value));
}

inline unsigned floor_log2(std::uint64_t x) {
  return static_cast<unsigned>(std::bit_width(x)) - 1;
}

inline unsigned ceil_log2(std::uint64_t x) {
  return x <= 1 ? 0u : static_cast<unsigned>(std::bit_width(x - 1));
}

// Position (0-based) of the k-th set bit of w, k >= 1. Caller guarantees popcount(w) >= k.
inline unsigned select_in_word(std::uint64_t w, unsigned k) {
  for (unsigned i = 1; i < k; ++i) w &= w - 1;
  return static_cast<unsigned>(std::countr_zero(w));
}

// Fixed-width packed integer array. Entries are width bits each, 0-based index.
class PackedIntArray {
 public:
  PackedIntArray() = default;
  PackedIntArray(std::size_t n, unsigned width)
      : n_(n), width_(width), words_((n * width + 63) / 64, 0) {
    if (width == 0 || width > 64) throw std::invalid_argument("PackedIntArray: bad width");
  }

  void set(std::size_t i, std::uint64_t v) {
    std::size_t bit = i * width_;
    std::size_t w = bit >> 6, off = bit & 63;
    std::uint64_t mask = width_ == 64 ? ~0ULL : ((1ULL << width_) - 1);
    words_[w] = (words_[w] & ~(mask << off)) | ((v & mask) << off);
    if (off + width_ > 64)
      words_[w + 1] = (words_[w + 1] & ~(mask >> (64 - off))) | ((v & mask) >> (64 - off));
  }

  std::uint64_t get(std::size_t i) const {
    std::size_t bit = i * width_;
    std::size_t w = bit >> 6, off = bit & 63;
    std::uint64_t mask = width_ == 64 ? ~0ULL : ((1ULL << width_) - 1);
    std::uint64_t v = words_[w] >> off;
    if (off + width_ > 64) v |= words_[w + 1] << (64 - off);
    return v & mask;
  }

  std::size_t size() const { return n_; }
  unsigned width() const { return width_; }
  std::uint64_t bits() const { return static_cast<std::uint64_t>(n_) * width_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  bool operator==(const PackedIntArray&) const = default;

 private:
  friend class ByteWriter;
  friend class ByteReader;
  std::size_t n_ = 0;
  unsigned width_ = 1;
  std::vector<std::uint64_t> words_;
};

// Little-endian byte sink with length-prefixed tagged sections.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void u16(std::uint16_t v) { raw(&v, 2); }
  void u32(std::uint32_t v) { raw(&v, 4); }
  void u64(std::uint64_t v) { raw(&v, 8); }

  void tag(const char (&t)[5]) { buf_.insert(buf_.end(), t, t + 4); }

  void words(const std::vector<std::uint64_t>& ws) {
    u64(ws.size());
    for (auto w : ws) u64(w);
  }

  template <typename T>
  void ints(const std::vector<T>& vs) {
    u64(vs.size());
    for (auto v : vs) {
      if constexpr (sizeof(T) == 2) u16(v);
      else if constexpr (sizeof(T) == 4) u32(v);
      else u64(v);
    }
  }

  void packed(const PackedIntArray& a) {
    u64(a.n_);
    u8(static_cast<std::uint8_t>(a.width_));
    words(a.words_);
  }

  const std::vector<std::uint8_t>& bytes() const { return buf_; }
  std::vector<std::uint8_t> take() { return std::move(buf_); }

 private:
  void raw(const void* p, std::size_t len) {
    const auto* b = static_cast<const std::uint8_t*>(p);
    buf_.insert(buf_.end(), b, b + len);  // host is little-endian; format is LE
  }
  std::vector<std::uint8_t> buf_;
};

class ByteReader {
 public:
  ByteReader(const std::uint8_t* data, std::size_t len) : p_(data), end_(data + len) {}
  explicit ByteReader(const std::vector<std::uint8_t>& v) : ByteReader(v.data(), v.size()) {}

  std::uint8_t u8() { return *need(1); }
  std::uint16_t u16() { return load<std::uint16_t>(); }
  std::uint32_t u32() { return load<std::uint32_t>(); }
  std::uint64_t u64() { return load<std::uint64_t>(); }

  void expect_tag(const char (&t)[5]) {
    const std::uint8_t* p = need(4);
    if (std::memcmp(p, t, 4) != 0)
      throw FormatError(std::string("bad section tag, expected ") + t);
  }

  std::vector<std::uint64_t> words() {
    std::uint64_t n = u64();
    check_count(n, 8);
    std::vector<std::uint64_t> ws(n);
    for (auto& w : ws) w = u64();
    return ws;
  }

  template <typename T>
  std::vector<T> ints() {
    std::uint64_t n = u64();
    check_count(n, sizeof(T));
    std::vector<T> vs(n);
    for (auto& v : vs) {
      if constexpr (sizeof(T) == 2) v = u16();
      else if constexpr (sizeof(T) == 4) v = u32();
      else v = u64();
    }
    return vs;
  }

  PackedIntArray packed() {
    PackedIntArray a;
    a.n_ = u64();
    a.width_ = u8();
    if (a.width_ == 0 || a.width_ > 64) throw FormatError("packed array: bad width");
    a.words_ = words();
    if (a.words_.size() != (a.n_ * a.width_ + 63) / 64)
      throw FormatError("packed array: word count mismatch");
    return a;
  }

  bool done() const { return p_ == end_; }

 private:
  const std::uint8_t* need(std::size_t len) {
    if (static_cast<std::size_t>(end_ - p_) < len) throw FormatError("truncated input");
    const std::uint8_t* r = p_;
    p_ += len;
    return r;
  }
  template <typename T>
  T load() {
    T v;
    std::memcpy(&v, need(sizeof(T)), sizeof(T));
    return v;
  }
  void check_count(std::uint64_t n, std::size_t elem) {
    if (n > static_cast<std::uint64_t>(end_ - p_) / elem) throw FormatError("bad element count");
  }
  const std::uint8_t* p_;
  const std::uint8_t* end_;
};

}  // namespace chordal
