/*
 * Copyright 2026 The relayrank Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>
#include <string_view>

#include "relay/stats.hpp"

namespace relay {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
inline constexpr std::uint64_t kStreamSalt = 0xD1B54A32D192ED03ull;

// SplitMix64 finalizer (Steele, Lea & Flood).
inline constexpr std::uint64_t splitmix_finalize(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

}  // namespace detail

/// FNV-1a hash of a stream name, used to fan a single user seed out to
/// named substreams ("simulation", "split", ...).
inline constexpr std::uint64_t stream_id(std::string_view name) {
  std::uint64_t h = 14695981039346656037ull;
  for (char ch : name) {
    h ^= static_cast<unsigned char>(ch);
    h *= 1099511628211ull;
  }
  return h;
}

/// SplitMix64 generator with derived substreams.
///
/// The generator is a counter-based SplitMix64: fully determined by its
/// 64-bit seed, identical output on every platform. substream(i) derives a
/// statistically independent child generator from the *creation* seed, so a
/// child stream does not depend on how far the parent has advanced. This is
/// what makes per-team simulation rows reproducible independently of the
/// field size, and lets parallel and sequential generation agree bit for
/// bit.
///
/// Normal deviates come from the inverse-CDF transform of a uniform draw,
/// so any two implementations of this generator agree on the normal stream
/// as well.
class Rng {
 public:
  explicit constexpr Rng(std::uint64_t seed) : seed_(seed), state_(seed) {}

  constexpr std::uint64_t next_u64() {
    state_ += detail::kGolden;
    return detail::splitmix_finalize(state_);
  }

  /// Uniform draw strictly inside (0, 1): (k + 0.5) * 2^-53 for a 53-bit k.
  double next_unit() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal draw via the inverse CDF of a uniform draw.
  double next_std_normal() { return std_normal_quantile(Probability(next_unit())); }

  /// Lognormal draw exp(mu + sigma * z) with z standard normal.
  double next_lognormal(const LognormalParams& params) {
    return std::exp(params.mu + params.sigma * next_std_normal());
  }

  /// Child generator for the given numeric stream index.
  constexpr Rng substream(std::uint64_t stream) const {
    return Rng(detail::splitmix_finalize(
        seed_ + detail::splitmix_finalize(stream ^ detail::kStreamSalt)));
  }

  /// Child generator for a named stream.
  constexpr Rng substream(std::string_view name) const {
    return substream(stream_id(name));
  }

  constexpr std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;   // creation seed; substream derivation root
  std::uint64_t state_;  // advances with each draw
};

}  // namespace relay
