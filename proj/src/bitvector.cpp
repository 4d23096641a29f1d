#include "chordal/bitvector.hpp"

namespace chordal {

BitVector::BitVector(const std::vector<bool>& bits) {
  BitBuilder b;
  for (bool v : bits) b.push(v);
  *this = b.build();
}

BitVector::BitVector(std::vector<std::uint64_t> words, std::uint64_t nbits)
    : n_(nbits), words_(std::move(words)) {
  words_.resize((n_ + 63) / 64, 0);
  if (n_ & 63) words_.back() &= (1ULL << (n_ & 63)) - 1;  // clear tail bits
  build_index();
}

void BitVector::build_index() {
  const std::uint64_t bpb = kSuperblockBits / kBlockBits;  // blocks per superblock
  const std::uint64_t wpb = kBlockBits / 64;               // words per block
  std::uint64_t nblocks = (n_ + kBlockBits - 1) / kBlockBits;
  block_.assign(nblocks, 0);
  super_.assign((n_ + kSuperblockBits - 1) / kSuperblockBits, 0);
  sel1_.clear();
  sel0_.clear();

  std::uint64_t ones = 0;
  std::uint64_t next1 = 1, next0 = 1;  // next sampled occurrence number per symbol
  for (std::uint64_t blk = 0; blk < nblocks; ++blk) {
    if (blk % bpb == 0) super_[blk / bpb] = ones;
    block_[blk] = static_cast<std::uint16_t>(ones - super_[blk / bpb]);
    std::uint64_t wend = std::min<std::uint64_t>((blk + 1) * wpb, words_.size());
    for (std::uint64_t w = blk * wpb; w < wend; ++w) {
      std::uint64_t word = words_[w];
      std::uint64_t zword = ~word;
      if (w + 1 == words_.size() && (n_ & 63)) zword &= (1ULL << (n_ & 63)) - 1;
      std::uint64_t base = w * 64;
      std::uint64_t pc = std::popcount(word);
      std::uint64_t zc = std::popcount(zword);
      std::uint64_t zeros = base - ones;  // zeros before this word
      while (next1 <= ones + pc) {
        sel1_.push_back(static_cast<std::uint32_t>(
            base + select_in_word(word, static_cast<unsigned>(next1 - ones)) + 1));
        next1 += kSelectSample;
      }
      while (next0 <= zeros + zc) {
        sel0_.push_back(static_cast<std::uint32_t>(
            base + select_in_word(zword, static_cast<unsigned>(next0 - zeros)) + 1));
        next0 += kSelectSample;
      }
      ones += pc;
    }
  }
  ones_ = ones;
}

std::uint64_t BitVector::rank1(std::uint64_t i) const {
  if (i == 0) return 0;
  if (i >= n_) return ones_;
  std::uint64_t blk = i / kBlockBits;
  std::uint64_t r = super_[blk / (kSuperblockBits / kBlockBits)] + block_[blk];
  std::uint64_t w = blk * (kBlockBits / 64);
  std::uint64_t wboundary = i / 64;
  for (; w < wboundary; ++w) r += std::popcount(words_[w]);
  if (i & 63) r += std::popcount(words_[wboundary] & ((1ULL << (i & 63)) - 1));
  return r;
}

std::uint64_t BitVector::select(bool b, std::uint64_t i) const {
  std::uint64_t count = b ? ones_ : zeros();
  if (i < 1 || i > count) return 0;  // out-of-range convention
  const auto& samples = b ? sel1_ : sel0_;
  std::uint64_t sample_idx = (i - 1) / kSelectSample;
  std::uint64_t pos = samples[sample_idx];  // position of occurrence sample_idx*kSelectSample + 1
  std::uint64_t have = sample_idx * kSelectSample + 1;
  if (have == i) return pos;

  std::uint64_t w = (pos - 1) >> 6;
  auto fetch = [&](std::uint64_t idx) {
    std::uint64_t word = words_[idx];
    if (!b) word = ~word;
    if (idx + 1 == words_.size() && (n_ & 63)) word &= (1ULL << (n_ & 63)) - 1;
    return word;
  };
  std::uint64_t word = fetch(w);
  word &= ~0ULL << ((pos - 1) & 63);
  word &= word - 1;  // drop the sampled occurrence itself
  std::uint64_t need = i - have;
  while (true) {
    std::uint64_t pc = std::popcount(word);
    if (pc >= need) return w * 64 + select_in_word(word, static_cast<unsigned>(need)) + 1;
    need -= pc;
    word = fetch(++w);
  }
}

std::uint64_t BitVector::bits() const {
  return n_ + 64 * super_.size() + 16 * block_.size() + 32 * (sel1_.size() + sel0_.size());
}

void BitVector::serialize(ByteWriter& w) const {
  w.tag("CBV1");
  w.u64(n_);
  w.words(words_);
  w.ints(super_);
  w.ints(block_);
  w.ints(sel1_);
  w.ints(sel0_);
}

BitVector BitVector::deserialize(ByteReader& r) {
  r.expect_tag("CBV1");
  std::uint64_t n = r.u64();
  auto words = r.words();
  if (words.size() != (n + 63) / 64) throw FormatError("bit vector: word count mismatch");
  BitVector bv(std::move(words), n);  // rebuilds the directory
  auto super = r.ints<std::uint64_t>();
  auto block = r.ints<std::uint16_t>();
  auto sel1 = r.ints<std::uint32_t>();
  auto sel0 = r.ints<std::uint32_t>();
  if (super != bv.super_ || block != bv.block_ || sel1 != bv.sel1_ || sel0 != bv.sel0_)
    throw FormatError("bit vector: directory mismatch");
  return bv;
}

}  // namespace chordal
