// Copyright 2026 The lcross Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LCROSS_RANDOM_HPP_
#define LCROSS_RANDOM_HPP_

#include <array>
#include <cstdint>
#include <optional>

#include "lcross/rational.hpp"

namespace lcross {

/// Philox4x32-10 counter-based block function (Salmon et al., Random123).
std::array<std::uint32_t, 4> philox4x32(std::array<std::uint32_t, 4> counter,
                                        std::array<std::uint32_t, 2> key);

/// Reproducible random source for substream `stream_id` of `seed`.
///
/// Draw k of the stream is a pure function of (seed, stream_id, k), so the
/// same substream yields identical values on every platform and thread
/// layout. All conversions to doubles are done here rather than through
/// <random> distributions, whose output is implementation-defined.
class SeededStream {
 public:
  SeededStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint32_t next_u32();
  std::uint64_t next_u64();

  /// Uniform on [0, 1) with 53 random bits.
  double uniform01();
  /// Uniform on (0, 1).
  double uniform_open01();
  /// Uniform integer on [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform integer on [0, bound) for arbitrary-size bound > 0.
  BigInt below(const BigInt& bound);
  /// +1 or -1 with probability 1/2 each.
  int fair_sign();

  /// Standard normal via the Marsaglia polar method.
  double normal();
  /// Standard Cauchy via the inverse CDF.
  double cauchy();

 private:
  void refill();

  std::array<std::uint32_t, 2> key_;
  std::uint64_t stream_id_;
  std::uint64_t block_ = 0;
  std::array<std::uint32_t, 4> buffer_{};
  unsigned used_ = 4;
  std::optional<double> spare_normal_;
};

}  // namespace lcross

#endif  // LCROSS_RANDOM_HPP_
