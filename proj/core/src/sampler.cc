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
#include "steadydim/sampler.h"

#include <limits>
#include <stdexcept>

namespace steadydim {

void SamplerConfig::Validate() const {
  if (retries < 1) throw std::invalid_argument("retries must be at least 1");
  if (sample_bound < 2) throw std::invalid_argument("sample bound must be at least 2");
  if (pit_budget < 1) throw std::invalid_argument("pit budget must be at least 1");
}

std::uint64_t MixSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t HashString(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::uint64_t Sampler::Below(std::uint64_t span) {
  if (span == 0) throw std::invalid_argument("Sampler::Below: empty range");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % span + 1) % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return x % span;
}

Integer Sampler::NonzeroSymmetric(std::uint64_t bound) {
  // 2*bound values: 0..bound-1 -> -bound..-1, bound..2*bound-1 -> 1..bound.
  const std::uint64_t k = Below(2 * bound);
  Integer v;
  if (k < bound) {
    mpz_set_ui(v.get_mpz_t(), bound - k);
    return -v;
  }
  mpz_set_ui(v.get_mpz_t(), k - bound + 1);
  return v;
}

Integer Sampler::Positive(std::uint64_t bound) {
  Integer v;
  mpz_set_ui(v.get_mpz_t(), Below(bound) + 1);
  return v;
}

}  // namespace steadydim
