#include "chordal/bitvector.hpp"

#include <doctest.h>

#include <random>

using namespace chordal;

namespace {

BitVector from_string(const std::string& s) {
  std::vector<bool> bits;
  for (char c : s) bits.push_back(c == '1');
  return BitVector(bits);
}

}  // namespace

TEST_CASE("rank on hand inputs") {
  BitVector b = from_string("10110");
  CHECK(b.rank(true, 3) == 2);
  CHECK(b.rank(false, 5) == 2);
  CHECK(b.rank(true, 0) == 0);
  CHECK(from_string("00000").rank(true, 5) == 0);
  CHECK_THROWS_AS(b.rank(true, 6), std::out_of_range);
}

TEST_CASE("select on hand inputs") {
  BitVector b = from_string("10110");
  CHECK(b.select(true, 2) == 3);
  CHECK(b.select(true, 4) == 0);  // fewer than four ones
  CHECK(b.select(false, 1) == 2);
  CHECK(b.select(true, 0) == 0);
  CHECK(BitVector().select(true, 1) == 0);
}

TEST_CASE("rank and select laws on random vectors") {
  std::mt19937_64 rng(42);
  for (std::uint64_t len : {0ull, 1ull, 63ull, 64ull, 65ull, 511ull, 513ull, 1000ull, 70001ull}) {
    for (double density : {0.0, 0.02, 0.5, 0.98, 1.0}) {
      std::vector<bool> bits(len);
      std::bernoulli_distribution coin(density);
      for (std::uint64_t i = 0; i < len; ++i) bits[i] = coin(rng);
      BitVector bv(bits);

      std::vector<std::uint64_t> prefix(len + 1, 0);
      for (std::uint64_t i = 0; i < len; ++i) prefix[i + 1] = prefix[i] + (bits[i] ? 1 : 0);
      CHECK(bv.ones() == prefix[len]);
      CHECK(bv.rank(true, len) == prefix[len]);
      CHECK(bv.rank(false, len) == len - prefix[len]);

      std::uint64_t samples = std::min<std::uint64_t>(len, 500);
      for (std::uint64_t s = 0; s <= samples; ++s) {
        std::uint64_t i = len == 0 ? 0 : s * len / std::max<std::uint64_t>(samples, 1);
        CHECK(bv.rank(true, i) == prefix[i]);
        CHECK(bv.rank(true, i) + bv.rank(false, i) == i);
      }
      for (bool sym : {false, true}) {
        std::uint64_t count = sym ? bv.ones() : bv.zeros();
        std::uint64_t checks = std::min<std::uint64_t>(count, 400);
        for (std::uint64_t s = 1; s <= checks; ++s) {
          std::uint64_t i = 1 + (s - 1) * count / checks;
          std::uint64_t p = bv.select(sym, i);
          REQUIRE(p != 0);
          CHECK(bv.bit(p) == sym);
          CHECK(bv.rank(sym, p) == i);
        }
        CHECK(bv.select(sym, count + 1) == 0);
      }
    }
  }
}

TEST_CASE("serialization round-trip") {
  std::mt19937_64 rng(7);
  std::vector<bool> bits(12345);
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = rng() & 1;
  BitVector bv(bits);

  ByteWriter w;
  bv.serialize(w);
  ByteWriter w2;
  bv.serialize(w2);
  CHECK(w.bytes() == w2.bytes());  // deterministic bytes

  ByteReader r(w.bytes());
  BitVector back = BitVector::deserialize(r);
  CHECK(back == bv);
  CHECK(back.rank(true, 12345) == bv.rank(true, 12345));
  CHECK(back.select(false, 100) == bv.select(false, 100));

  auto corrupted = w.bytes();
  corrupted[1] ^= 0xff;
  ByteReader rc(corrupted);
  CHECK_THROWS_AS(BitVector::deserialize(rc), FormatError);
}
