// Copyright 2026 relbel contributors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace relbel {

// Splittable counter-style generator built on the SplitMix64 finalizer
// (Steele, Lea & Flood 2014; Vigna 2015).  A stream is fully determined by
// (seed, stream_index): the starting state is the pair hashed through two
// finalizer rounds, after which the stream walks the usual Weyl sequence.
// Identical (seed, stream_index) reproduce bit-identical sequences; distinct
// stream indices give statistically independent streams, so parallel Monte
// Carlo can hand one stream to each chunk of work.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t stream_index = 0);

  std::uint64_t next_u64();

  // Uniform draw strictly inside (0, 1): 52 random bits at cell midpoints.
  double next_uniform();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

 private:
  std::uint64_t state_;
  std::uint64_t seed_;
  std::uint64_t stream_index_;
};

}  // namespace relbel
