#include "chordal/monotone_sequence.hpp"

namespace chordal {

MonotoneSequence::MonotoneSequence(const std::vector<std::uint64_t>& values) : n_(values.size()) {
  BitBuilder b;
  std::uint64_t prev = 0;
  for (std::uint64_t v : values) {
    if (v < prev) throw std::invalid_argument("MonotoneSequence: values must be non-decreasing");
    b.append_run(true, v - prev);
    b.push(false);
    prev = v;
  }
  stream_ = b.build();
}

void MonotoneSequence::serialize(ByteWriter& w) const {
  w.tag("CMS1");
  w.u64(n_);
  stream_.serialize(w);
}

MonotoneSequence MonotoneSequence::deserialize(ByteReader& r) {
  r.expect_tag("CMS1");
  MonotoneSequence s;
  s.n_ = r.u64();
  s.stream_ = BitVector::deserialize(r);
  if (s.stream_.zeros() != s.n_) throw FormatError("monotone sequence: zero count mismatch");
  return s;
}

}  // namespace chordal
