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
#include "steadydim/cone.h"

#include <stdexcept>
#include <vector>

namespace steadydim {
namespace {

// Phase-1 tableau for  A v + a = b,  v, a >= 0,  b >= 0,  minimize sum(a).
// Columns 0..nv-1 are v, nv..nv+m-1 the artificials; the last column is b.
class Phase1 {
 public:
  Phase1(const RatMatrix& a, const RationalVector& rhs)
      : m_(a.rows()), nv_(a.cols()), width_(nv_ + m_ + 1),
        tab_(m_, RationalVector(width_)), basis_(m_) {
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = sgn(rhs[i]) < 0;
      for (std::size_t j = 0; j < nv_; ++j) tab_[i][j] = flip ? -a(i, j) : a(i, j);
      tab_[i][nv_ + i] = 1;
      tab_[i][width_ - 1] = flip ? -rhs[i] : rhs[i];
      basis_[i] = nv_ + i;
    }
  }

  // Returns the optimal objective (sum of artificials).
  Rational Solve() {
    while (true) {
      // Reduced cost of non-artificial column j is -(sum of column over rows);
      // artificial columns never re-enter.
      std::size_t enter = width_;
      for (std::size_t j = 0; j < nv_ && enter == width_; ++j) {
        if (IsBasic(j)) continue;
        Rational reduced = 0;
        for (std::size_t i = 0; i < m_; ++i) {
          if (basis_[i] >= nv_) reduced -= tab_[i][j];
        }
        if (sgn(reduced) < 0) enter = j;
      }
      if (enter == width_) break;

      // Ratio test; Bland: among ties pick the smallest basic variable index.
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(tab_[i][enter]) <= 0) continue;
        Rational ratio = tab_[i][width_ - 1] / tab_[i][enter];
        if (leave == m_ || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      // The phase-1 objective is bounded below by 0, so a pivot row exists.
      if (leave == m_) throw std::logic_error("phase-1 simplex: unbounded");
      Pivot(leave, enter);
    }
    Rational obj = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] >= nv_) obj += tab_[i][width_ - 1];
    }
    return obj;
  }

  RationalVector Solution() const {
    RationalVector v(nv_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < nv_) v[basis_[i]] = tab_[i][width_ - 1];
    }
    return v;
  }

 private:
  bool IsBasic(std::size_t j) const {
    for (std::size_t b : basis_) {
      if (b == j) return true;
    }
    return false;
  }

  void Pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / tab_[row][col];
    for (auto& e : tab_[row]) e *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || sgn(tab_[i][col]) == 0) continue;
      const Rational f = tab_[i][col];
      for (std::size_t j = 0; j < width_; ++j) {
        if (sgn(tab_[row][j]) != 0) tab_[i][j] -= f * tab_[row][j];
      }
    }
    basis_[row] = col;
  }

  std::size_t m_, nv_, width_;
  std::vector<RationalVector> tab_;
  std::vector<std::size_t> basis_;
};

}  // namespace

ConeResult PositiveKernelVector(const RatMatrix& n_mat) {
  const std::size_t r = n_mat.cols();
  if (r == 0) throw std::invalid_argument("PositiveKernelVector: N has no columns");

  // Substitute w = 1 + v:  N v = -N 1.
  const RationalVector ones(r, Rational(1));
  RationalVector rhs = n_mat * ones;
  for (auto& q : rhs) q = -q;

  Phase1 lp(n_mat, rhs);
  if (sgn(lp.Solve()) != 0) return {ConeResult::Status::Empty, std::nullopt};

  RationalVector w = lp.Solution();
  for (auto& q : w) q += 1;
  w = ClearDenominators(w);

  for (const auto& q : n_mat * w) {
    if (sgn(q) != 0) throw std::logic_error("cone witness is not in ker(N)");
  }
  for (const auto& q : w) {
    if (q < 1) throw std::logic_error("cone witness has an entry below 1");
  }
  return {ConeResult::Status::PositiveVectorExists, std::move(w)};
}

}  // namespace steadydim
