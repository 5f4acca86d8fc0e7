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
#ifndef STEADYDIM_TESTS_TEST_UTIL_H_
#define STEADYDIM_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "steadydim/mpoly.h"
#include "steadydim/network.h"
#include "steadydim/ratmat.h"
#include "steadydim/sampler.h"

namespace steadydim {

inline void PrintTo(const MPoly& p, std::ostream* os) { *os << ToString(p); }

}  // namespace steadydim

namespace steadydim::testing {

inline std::string FixturePath(const std::string& name) {
  return std::string(STEADYDIM_FIXTURE_DIR) + "/" + name;
}

inline std::string ReadFixture(const std::string& name) {
  std::ifstream in(FixturePath(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ReactionNetwork LoadFixture(const std::string& name) {
  return ParseNetwork(ReadFixture(name));
}

inline long Uniform(Sampler& rng, long lo, long hi) {
  return lo + static_cast<long>(rng.Below(static_cast<std::uint64_t>(hi - lo + 1)));
}

inline Rational Frac(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

/// Small-integer or small-fraction entries; roughly a third are zero.
inline RatMatrix RandomMatrix(Sampler& rng, std::size_t rows, std::size_t cols) {
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (rng.Below(3) == 0) continue;
      Rational q(Uniform(rng, -5, 5), Uniform(rng, 1, 3));
      q.canonicalize();
      m(i, j) = q;
    }
  }
  return m;
}

/// Random mass-action network with at most max_species species and
/// max_reactions reactions; coefficients in {0, 1, 2}.
inline ReactionNetwork RandomNetwork(Sampler& rng, std::size_t max_species = 6,
                                     std::size_t max_reactions = 8) {
  const std::size_t ns = static_cast<std::size_t>(Uniform(rng, 1, static_cast<long>(max_species)));
  const std::size_t nr = static_cast<std::size_t>(Uniform(rng, 1, static_cast<long>(max_reactions)));
  auto random_complex = [&] {
    Complex c;
    for (std::size_t sp = 0; sp < ns; ++sp) {
      const std::uint64_t roll = rng.Below(6);
      if (roll >= 4) c[sp] = static_cast<std::uint32_t>(roll - 3);
    }
    return c;
  };
  std::vector<Reaction> reactions;
  while (reactions.size() < nr) {
    Reaction r{random_complex(), random_complex(), {}};
    if (r.reactant == r.product) continue;
    r.label = "k" + std::to_string(reactions.size() + 1);
    reactions.push_back(std::move(r));
  }
  // Drop unused species and renumber in first-appearance order.
  std::vector<long> remap(ns, -1);
  std::size_t next = 0;
  for (const auto& r : reactions) {
    for (const Complex* c : {&r.reactant, &r.product}) {
      for (const auto& [sp, coef] : *c) {
        if (remap[sp] < 0) remap[sp] = static_cast<long>(next++);
      }
    }
  }
  ReactionNetwork net;
  net.species.resize(next);
  for (std::size_t sp = 0; sp < ns; ++sp) {
    if (remap[sp] >= 0) net.species[remap[sp]] = "S" + std::to_string(sp + 1);
  }
  for (const auto& r : reactions) {
    Reaction out{{}, {}, r.label};
    for (const auto& [sp, coef] : r.reactant) out.reactant[remap[sp]] = coef;
    for (const auto& [sp, coef] : r.product) out.product[remap[sp]] = coef;
    net.reactions.push_back(std::move(out));
  }
  return net;
}

/// U * m for a random unimodular integer U (row additions, swaps, negations).
inline RatMatrix RandomUnimodularRows(Sampler& rng, const RatMatrix& m) {
  RatMatrix out = m;
  const std::size_t rows = m.rows();
  if (rows == 0) return out;
  for (int step = 0; step < 8; ++step) {
    const std::size_t i = rng.Below(rows);
    const std::size_t j = rng.Below(rows);
    const std::uint64_t op = rng.Below(3);
    const Rational factor(rng.Below(2) ? Uniform(rng, 1, 2) : -Uniform(rng, 1, 2));
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (op == 0 && i != j) {
        out(i, c) += factor * out(j, c);
      } else if (op == 1 && i != j) {
        std::swap(out(i, c), out(j, c));
      } else if (op == 2) {
        out(i, c) = -out(i, c);
      }
    }
  }
  return out;
}

/// Laplace expansion along the first row; independent of Rref.
inline Rational BruteDet(const RatMatrix& m, std::vector<std::size_t> rows,
                         std::vector<std::size_t> cols) {
  if (rows.empty()) return 1;
  Rational sum = 0;
  const std::size_t r0 = rows[0];
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t q = 0; q < cols.size(); ++q) {
    if (sgn(m(r0, cols[q])) == 0) continue;
    std::vector<std::size_t> sub_cols = cols;
    sub_cols.erase(sub_cols.begin() + static_cast<long>(q));
    Rational t = m(r0, cols[q]) * BruteDet(m, sub_rows, sub_cols);
    sum += (q % 2 == 0) ? t : Rational(-t);
  }
  return sum;
}

/// Largest k with a nonzero k x k minor; exponential, for small matrices only.
inline std::size_t BruteRank(const RatMatrix& m) {
  const std::size_t limit = std::min(m.rows(), m.cols());
  for (std::size_t k = limit; k > 0; --k) {
    std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
      std::vector<std::size_t> rows;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        if (rsel[i]) rows.push_back(i);
      }
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
      do {
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if (csel[j]) cols.push_back(j);
        }
        if (sgn(BruteDet(m, rows, cols)) != 0) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

}  // namespace steadydim::testing

#endif  // STEADYDIM_TESTS_TEST_UTIL_H_
