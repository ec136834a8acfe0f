// Copyright 2026 The gkplat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GKPLAT_PHILOX_H
#define GKPLAT_PHILOX_H

#include <array>
#include <cstdint>
#include <limits>

namespace gkplat {

inline constexpr const char* kRngAlgorithm = "philox4x32-10";

using PhiloxCounter = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

/// Philox4x32 with 10 rounds (Salmon et al., SC'11).
PhiloxCounter philox4x32_10(PhiloxCounter counter, PhiloxKey key) noexcept;

/// Uniform random bit generator over one Philox stream. The stream is addressed by
/// (seed, stream id); words are produced by walking the low counter word, so any
/// trial can be regenerated without replaying earlier ones.
class PhiloxStream {
 public:
  using result_type = std::uint32_t;

  PhiloxStream(std::uint64_t seed, std::uint64_t stream) noexcept
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)},
        stream_lo_(static_cast<std::uint32_t>(stream)),
        stream_hi_(static_cast<std::uint32_t>(stream >> 32)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    if (index_ == 4) {
      block_ = philox4x32_10({block_counter_, 0, stream_lo_, stream_hi_}, key_);
      ++block_counter_;
      index_ = 0;
    }
    return block_[index_++];
  }

 private:
  PhiloxKey key_;
  std::uint32_t stream_lo_;
  std::uint32_t stream_hi_;
  std::uint32_t block_counter_ = 0;
  PhiloxCounter block_{};
  unsigned index_ = 4;
};

/// Standard normal deviate by Box-Muller from two 53-bit uniforms. Independent of
/// the standard library's distribution implementation, so streams are portable.
double standard_normal(PhiloxStream& rng) noexcept;

}  // namespace gkplat

#endif  // GKPLAT_PHILOX_H
