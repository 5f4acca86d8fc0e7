// Copyright 2026 The steadydim Authors
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
#ifndef STEADYDIM_SAMPLER_H_
#define STEADYDIM_SAMPLER_H_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

#include "steadydim/rational.h"

namespace steadydim {

/// Knobs of the randomized rank test.
struct SamplerConfig {
  std::uint64_t seed = 0;
  std::size_t retries = 5;              // phase-1 random samples
  std::uint64_t sample_bound = 65536;   // coordinates drawn from [-H, H]
  std::size_t pit_budget = 100;         // samples per bound before doubling
  std::size_t symbolic_threshold = 6;   // cofactor expansion up to this size
  std::size_t max_pit_rounds = 0;       // 0 = keep doubling without limit

  /// Throws std::invalid_argument unless retries >= 1 and sample_bound >= 2.
  void Validate() const;
};

/// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t stream);
/// FNV-1a, for deriving per-file streams from a path.
std::uint64_t HashString(std::string_view s);

/// Deterministic integer sampler. std::mt19937_64 output is fixed by the
/// standard; the bounded draws use rejection sampling so values do not depend
/// on the standard library's distribution implementation.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, span).
  std::uint64_t Below(std::uint64_t span);
  /// Uniform over [-bound, bound] without 0.
  Integer NonzeroSymmetric(std::uint64_t bound);
  /// Uniform over [1, bound].
  Integer Positive(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace steadydim

#endif  // STEADYDIM_SAMPLER_H_
