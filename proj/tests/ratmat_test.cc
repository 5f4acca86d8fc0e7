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
#include "steadydim/ratmat.h"

#include <gtest/gtest.h>

#include "steadydim/network.h"
#include "test_util.h"

namespace steadydim {
namespace {

using testing::BruteRank;
using testing::RandomMatrix;

RatMatrix CalciumGamma() {
  return RatMatrix::FromRows({{1, -1, 1, -1, 1, 0},
                              {0, 0, -1, 0, 0, 1},
                              {0, 0, 0, -1, 1, 1},
                              {0, 0, 0, 1, -1, -1}});
}

RatMatrix CalciumB() {
  return RatMatrix::FromRows({{0, 1, 1, 1, 0, 0},
                              {0, 0, 1, 0, 0, 0},
                              {0, 0, 0, 1, 0, 0},
                              {0, 0, 0, 0, 1, 1}});
}

bool SameLine(std::span<const Rational> a, std::span<const Rational> b) {
  RatMatrix m(2, a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    m(0, j) = a[j];
    m(1, j) = b[j];
  }
  return Rank(m) == 1;
}

TEST(RrefTest, Identity) {
  const RrefResult rr = Rref(RatMatrix::Identity(3));
  EXPECT_EQ(rr.reduced, RatMatrix::Identity(3));
  EXPECT_EQ(rr.pivots, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(rr.rank, 3u);
}

TEST(RrefTest, Zero) {
  const RrefResult rr = Rref(RatMatrix(2, 2));
  EXPECT_EQ(rr.reduced, RatMatrix(2, 2));
  EXPECT_TRUE(rr.pivots.empty());
  EXPECT_EQ(rr.rank, 0u);
}

TEST(RrefTest, CalciumGammaHasRankThree) {
  EXPECT_EQ(Rref(CalciumGamma()).rank, 3u);
}

TEST(RrefTest, FractionsStayExact) {
  const RatMatrix m = RatMatrix::FromRows({{2, 4}, {3, 7}});
  const RrefResult rr = Rref(m);
  EXPECT_EQ(rr.reduced, RatMatrix::Identity(2));
}

TEST(RankTest, Examples) {
  EXPECT_EQ(Rank(RatMatrix::Identity(4)), 4u);
  EXPECT_EQ(Rank(RatMatrix::FromRows({{1, 2}, {1, 2}})), 1u);
  EXPECT_EQ(Rank(RatMatrix(0, 5)), 0u);
}

TEST(RankTest, CalciumStackedMatrixAtPaperKernelVector) {
  const RationalVector w{1, 1, 1, 2, 1, 1};
  const RatMatrix top = CalciumGamma() * RatMatrix::Diagonal(w) * CalciumB().Transpose();
  const RatMatrix stacked = VStack(top, RatMatrix::FromRows({{0, 0, 1, 1}}));
  EXPECT_EQ(Rank(stacked), 4u);
  EXPECT_EQ(BruteRank(stacked), 4u);
}

TEST(KernelBasisTest, ZeroMatrixGivesFullSpace) {
  const RatMatrix k = KernelBasis(RatMatrix(2, 3));
  EXPECT_EQ(k.rows(), 3u);
  EXPECT_EQ(k.cols(), 3u);
  EXPECT_EQ(Rank(k), 3u);
}

TEST(KernelBasisTest, SingleRow) {
  const RatMatrix n = RatMatrix::FromRows({{1, -2, 1}});
  const RatMatrix g = KernelBasis(n);
  ASSERT_EQ(g.rows(), 3u);
  ASSERT_EQ(g.cols(), 2u);
  EXPECT_TRUE((n * g).IsZero());
  for (std::size_t c = 0; c < 2; ++c) {
    EXPECT_EQ(g(0, c) - 2 * g(1, c) + g(2, c), 0);
  }
  EXPECT_EQ(Rank(g), 2u);
}

TEST(KernelBasisTest, CalciumGamma) {
  const RatMatrix g = KernelBasis(CalciumGamma());
  EXPECT_EQ(g.rows(), 6u);
  EXPECT_EQ(g.cols(), 3u);
  EXPECT_TRUE((CalciumGamma() * g).IsZero());
  EXPECT_TRUE(g.IsIntegral());
}

TEST(KernelBasisTest, FullColumnRankGivesEmptyBasis) {
  const RatMatrix g = KernelBasis(RatMatrix::Identity(3));
  EXPECT_EQ(g.rows(), 3u);
  EXPECT_EQ(g.cols(), 0u);
}

TEST(RowBasisTest, Identity) {
  EXPECT_EQ(RowBasis(RatMatrix::Identity(3)), RatMatrix::Identity(3));
}

TEST(RowBasisTest, DependentRowsCollapse) {
  const RatMatrix n = RowBasis(RatMatrix::FromRows({{1, -2, 1}, {-1, 2, -1}}));
  ASSERT_EQ(n.rows(), 1u);
  const RationalVector expect{1, -2, 1};
  EXPECT_TRUE(SameLine(n.row(0), expect));
}

TEST(RowBasisTest, CalciumRowSpace) {
  const RatMatrix gamma = CalciumGamma();
  const RatMatrix n = RowBasis(gamma);
  EXPECT_EQ(n.rows(), 3u);
  EXPECT_EQ(Rank(n), 3u);
  EXPECT_EQ(Rank(VStack(gamma, n)), 3u);
  EXPECT_TRUE(n.IsIntegral());
}

TEST(RowBasisTest, RowsArePrimitive) {
  const RatMatrix n = RowBasis(RatMatrix::FromRows({{2, 4, 6}, {1, 1, 0}}));
  for (std::size_t i = 0; i < n.rows(); ++i) {
    Integer g = 0;
    for (const auto& q : n.row(i)) {
      ASSERT_EQ(q.get_den(), 1);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
    }
    EXPECT_EQ(g, 1);
  }
}

TEST(LeftKernelBasisTest, CalciumConservationLaw) {
  const RatMatrix w = LeftKernelBasis(CalciumGamma());
  ASSERT_EQ(w.rows(), 1u);
  const RationalVector expect{0, 0, 1, 1};
  EXPECT_TRUE(SameLine(w.row(0), expect));
  EXPECT_TRUE((w * CalciumGamma()).IsZero());
}

TEST(LeftKernelBasisTest, DependentRows) {
  const RatMatrix gamma = RatMatrix::FromRows({{1, -2, 1}, {-1, 2, -1}});
  const RatMatrix w = LeftKernelBasis(gamma);
  ASSERT_EQ(w.rows(), 1u);
  EXPECT_TRUE((w * gamma).IsZero());
  const RationalVector expect{1, 1};
  EXPECT_TRUE(SameLine(w.row(0), expect));
}

TEST(LeftKernelBasisTest, FullRowRank) {
  const RatMatrix w = LeftKernelBasis(RatMatrix::FromRows({{1, 0, 2}, {0, 1, 3}}));
  EXPECT_EQ(w.rows(), 0u);
}

TEST(RatMatrixTest, ShapeErrors) {
  EXPECT_THROW(RatMatrix(2, 2, RationalVector(3)), std::invalid_argument);
  EXPECT_THROW(RatMatrix(2, 3) * RatMatrix(2, 3), std::invalid_argument);
  EXPECT_THROW(VStack(RatMatrix(1, 2), RatMatrix(1, 3)), std::invalid_argument);
}

TEST(RatMatrixTest, InColumnSpan) {
  const RatMatrix m = RatMatrix::FromRows({{1, 0}, {0, 1}, {1, 1}});
  EXPECT_TRUE(InColumnSpan(m, RationalVector{2, 3, 5}));
  EXPECT_FALSE(InColumnSpan(m, RationalVector{2, 3, 4}));
}

// Rank-nullity, exact kernel products, rref idempotence and transpose rank
// on random rational matrices; rank is cross-checked against minor
// enumeration.
TEST(RatMatrixPropertyTest, RandomMatrices) {
  Sampler rng(20261019);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t rows = rng.Below(6);
    const std::size_t cols = rng.Below(7);
    const RatMatrix m = RandomMatrix(rng, rows, cols);
    const RrefResult rr = Rref(m);
    ASSERT_EQ(rr.rank, BruteRank(m)) << ToString(m);
    EXPECT_EQ(Rank(m.Transpose()), rr.rank);
    EXPECT_EQ(Rref(rr.reduced).reduced, rr.reduced);
    EXPECT_TRUE(std::is_sorted(rr.pivots.begin(), rr.pivots.end()));

    const RatMatrix k = KernelBasis(m);
    EXPECT_EQ(k.cols() + rr.rank, cols);
    if (rows > 0 && k.cols() > 0) EXPECT_TRUE((m * k).IsZero());
    EXPECT_EQ(Rank(k), k.cols());

    const RatMatrix lk = LeftKernelBasis(m);
    EXPECT_EQ(lk.rows() + rr.rank, rows);
    if (lk.rows() > 0 && cols > 0) EXPECT_TRUE((lk * m).IsZero());

    const RatMatrix rb = RowBasis(m);
    EXPECT_EQ(rb.rows(), rr.rank);
    if (cols > 0) EXPECT_EQ(Rank(VStack(m, rb)), rr.rank);
  }
}

// Gamma and its row basis N give the same stacked rank for any w and h.
TEST(RatMatrixPropertyTest, GammaAndRowBasisAgreeOnStackedRank) {
  Sampler rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const NetworkMatrices mats = BuildMatrices(testing::RandomNetwork(rng));
    RationalVector w(mats.r), h(mats.n);
    for (auto& q : w) q = testing::Uniform(rng, -4, 4);
    for (auto& q : h) q = testing::Uniform(rng, 1, 4);
    const RatMatrix tail = mats.b.Transpose() * RatMatrix::Diagonal(h);
    const RatMatrix via_gamma =
        VStack(mats.gamma * RatMatrix::Diagonal(w) * tail, mats.w_mat);
    const RatMatrix via_n = VStack(mats.n_mat * RatMatrix::Diagonal(w) * tail, mats.w_mat);
    EXPECT_EQ(Rank(via_gamma), Rank(via_n));
  }
}

}  // namespace
}  // namespace steadydim
