// Copyright 2026 The eeqt authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>

namespace eeqt {

/// One reproducible random stream out of a seeded family.
///
/// Stream derivation (fixed contract): the xoshiro256++ state is produced by
/// a splitmix64 sequence seeded with
///
///     mix64(master_seed) ^ mix64(0x9E3779B97F4A7C15 + stream_index)
///
/// where mix64 is the splitmix64 output finalizer. Identical
/// (master_seed, stream_index) pairs therefore yield bitwise identical draw
/// sequences; distinct indices give statistically independent streams.
/// Ensembles assign stream_index = trajectory ordinal.
class RngStream {
  public:
    RngStream(std::uint64_t master_seed, std::uint64_t stream_index);

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_index() const { return stream_index_; }

    /// Raw 64 uniform bits (xoshiro256++ output).
    std::uint64_t next_u64();

    /// Uniform on [0, 1) with 53-bit resolution.
    double uniform01();

    /// Standard normal via Box-Muller; consumes exactly two uniforms.
    double standard_normal();

  private:
    std::uint64_t master_seed_;
    std::uint64_t stream_index_;
    std::uint64_t state_[4];
};

}  // namespace eeqt
