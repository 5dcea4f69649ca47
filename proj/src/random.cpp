// Copyright 2026 relbel contributors
// SPDX-License-Identifier: Apache-2.0
#include "relbel/random.hpp"

namespace relbel {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed), stream_index_(stream_index) {
  state_ = mix64(mix64(seed + kGolden) + stream_index * kGolden + kGolden);
}

std::uint64_t RandomStream::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double RandomStream::next_uniform() {
  return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1p-52;
}

}  // namespace relbel
