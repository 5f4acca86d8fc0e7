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
#include "steadydim/network.h"

#include <gtest/gtest.h>

#include "test_util.h"

namespace steadydim {
namespace {

constexpr const char* kCalcium =
    "0 <-> X1 ; k1, k2\n"
    "X1 + X2 -> 2 X1 ; k3\n"
    "X1 + X3 <-> X4 ; k4, k5\n"
    "X4 -> X2 + X3 ; k6";

ParseError ExpectParseError(const std::string& text) {
  try {
    ParseNetwork(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError for: " << text;
  return ParseError(0, 0, "");
}

TEST(ParseNetworkTest, Calcium) {
  const ReactionNetwork net = ParseNetwork(kCalcium);
  EXPECT_EQ(net.species, (std::vector<std::string>{"X1", "X2", "X3", "X4"}));
  ASSERT_EQ(net.num_reactions(), 6u);
  // Reverse directions follow their forward partner.
  EXPECT_TRUE(net.reactions[0].reactant.empty());
  EXPECT_EQ(net.reactions[0].product, (Complex{{0, 1}}));
  EXPECT_EQ(net.reactions[1].reactant, (Complex{{0, 1}}));
  EXPECT_TRUE(net.reactions[1].product.empty());
  EXPECT_EQ(net.reactions[2].product, (Complex{{0, 2}}));
  EXPECT_EQ(net.reactions[4].label, "k5");
  EXPECT_EQ(net.reactions[4].reactant, (Complex{{3, 1}}));
}

TEST(ParseNetworkTest, ThinSet) {
  const ReactionNetwork net = ParseNetwork(
      "X -> Y ; k1\nX -> Z ; k2\nY + Z -> X + Y + Z ; k3\nY + Z -> 0 ; k4");
  EXPECT_EQ(net.num_species(), 3u);
  EXPECT_EQ(net.num_reactions(), 4u);
}

TEST(ParseNetworkTest, CoefficientSpellings) {
  const ReactionNetwork net = ParseNetwork("2*A + 3 B + 4C -> A   # trailing comment\n");
  ASSERT_EQ(net.num_reactions(), 1u);
  EXPECT_EQ(net.reactions[0].reactant, (Complex{{0, 2}, {1, 3}, {2, 4}}));
  EXPECT_EQ(net.reactions[0].label, "k1");
}

TEST(ParseNetworkTest, RepeatedSpeciesAccumulate) {
  const ReactionNetwork net = ParseNetwork("X + X -> Y");
  EXPECT_EQ(net.reactions[0].reactant, (Complex{{0, 2}}));
}

TEST(ParseNetworkTest, AutoLabelsSkipTakenNames) {
  const ReactionNetwork net = ParseNetwork("A -> B\nB -> A ; k1\nA <-> C");
  EXPECT_EQ(net.reactions[0].label, "k2");
  EXPECT_EQ(net.reactions[1].label, "k1");
  EXPECT_EQ(net.reactions[2].label, "k3");
  EXPECT_EQ(net.reactions[3].label, "k4");
}

TEST(ParseNetworkTest, CommentsAndBlankLines) {
  const ReactionNetwork net = ParseNetwork("# header\n\n   \nA -> B ; r\n# end\n");
  EXPECT_EQ(net.num_reactions(), 1u);
  EXPECT_EQ(net.reactions[0].label, "r");
}

TEST(ParseNetworkTest, SelfLoopRejected) {
  const ParseError e = ExpectParseError("X1 -> X1 ; k1");
  EXPECT_EQ(e.line, 1u);
  EXPECT_NE(e.message.find("self-loop"), std::string::npos);
}

TEST(ParseNetworkTest, ErrorPositions) {
  ParseError e = ExpectParseError("A -> B\nA + -> C");
  EXPECT_EQ(e.line, 2u);
  EXPECT_EQ(e.column, 4u);

  e = ExpectParseError("A => B");
  EXPECT_EQ(e.column, 3u);

  e = ExpectParseError("A -> B ; k1\nB -> C ; k1");
  EXPECT_EQ(e.line, 2u);
  EXPECT_NE(e.message.find("duplicate"), std::string::npos);

  e = ExpectParseError("A -> B$");
  EXPECT_EQ(e.column, 7u);
}

TEST(ParseNetworkTest, MalformedInputs) {
  ExpectParseError("");
  ExpectParseError("# only a comment");
  ExpectParseError("A B -> C");
  ExpectParseError("0 A -> B");
  ExpectParseError("0 + A -> B");
  ExpectParseError("A -> B -> C");
  ExpectParseError("A <-> B ; k1");
  ExpectParseError("A -> B ; k1, k2");
  ExpectParseError("A -> B ;");
  ExpectParseError("A -> ; k1");
  ExpectParseError("-> B");
  ExpectParseError("A -> B ; 1k");
  ExpectParseError("A <- B");
}

TEST(ParseNetworkTest, RenderRoundTrip) {
  Sampler rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const ReactionNetwork net = testing::RandomNetwork(rng);
    EXPECT_EQ(ParseNetwork(RenderNetwork(net)), net) << RenderNetwork(net);
  }
  const ReactionNetwork calcium = ParseNetwork(kCalcium);
  EXPECT_EQ(ParseNetwork(RenderNetwork(calcium)), calcium);
}

TEST(BuildMatricesTest, Calcium) {
  const NetworkMatrices m = BuildMatrices(ParseNetwork(kCalcium));
  EXPECT_EQ(m.gamma, RatMatrix::FromRows({{1, -1, 1, -1, 1, 0},
                                          {0, 0, -1, 0, 0, 1},
                                          {0, 0, 0, -1, 1, 1},
                                          {0, 0, 0, 1, -1, -1}}));
  EXPECT_EQ(m.b, RatMatrix::FromRows({{0, 1, 1, 1, 0, 0},
                                      {0, 0, 1, 0, 0, 0},
                                      {0, 0, 0, 1, 0, 0},
                                      {0, 0, 0, 0, 1, 1}}));
  EXPECT_EQ(m.n, 4u);
  EXPECT_EQ(m.r, 6u);
  EXPECT_EQ(m.s, 3u);
  EXPECT_EQ(m.d, 1u);
  EXPECT_EQ(m.w_mat, RatMatrix::FromRows({{0, 0, 1, 1}}));
}

TEST(BuildMatricesTest, Quadratic) {
  const NetworkMatrices m = BuildMatrices(
      ParseNetwork("3 X1 + X2 -> 4 X1\n2 X1 + X2 -> 3 X2\nX1 + X2 -> 2 X1"));
  EXPECT_EQ(m.gamma, RatMatrix::FromRows({{1, -2, 1}, {-1, 2, -1}}));
  EXPECT_EQ(m.b, RatMatrix::FromRows({{3, 2, 1}, {1, 1, 1}}));
  EXPECT_EQ(m.s, 1u);
  EXPECT_EQ(m.d, 1u);
  EXPECT_EQ(m.n_mat, RatMatrix::FromRows({{1, -2, 1}}));
  EXPECT_EQ(m.w_mat, RatMatrix::FromRows({{1, 1}}));
}

TEST(BuildMatricesTest, SingleReaction) {
  const NetworkMatrices m = BuildMatrices(ParseNetwork("X -> Y"));
  EXPECT_EQ(m.gamma, RatMatrix::FromRows({{-1}, {1}}));
  EXPECT_EQ(m.b, RatMatrix::FromRows({{1}, {0}}));
  EXPECT_EQ(m.s, 1u);
  EXPECT_EQ(m.d, 1u);
}

TEST(BuildMatricesTest, RejectsInvalidNetwork) {
  ReactionNetwork net;
  net.species = {"A"};
  EXPECT_THROW(BuildMatrices(net), std::invalid_argument);
  net.reactions.push_back({{{0, 1}}, {{0, 1}}, "k1"});
  EXPECT_THROW(BuildMatrices(net), std::invalid_argument);
}

TEST(BuildMatricesPropertyTest, Invariants) {
  Sampler rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const ReactionNetwork net = testing::RandomNetwork(rng);
    const NetworkMatrices m = BuildMatrices(net);
    for (std::size_t i = 0; i < m.r; ++i) {
      long net_change = 0;
      for (const auto& [sp, c] : net.reactions[i].product) net_change += c;
      for (const auto& [sp, c] : net.reactions[i].reactant) net_change -= c;
      Rational col_sum = 0;
      for (std::size_t j = 0; j < m.n; ++j) {
        col_sum += m.gamma(j, i);
        EXPECT_GE(m.b(j, i), 0);
      }
      EXPECT_EQ(col_sum, net_change);
    }
    const std::size_t rank = Rank(m.gamma);
    EXPECT_EQ(m.s, rank);
    EXPECT_EQ(m.s + m.d, m.n);
    EXPECT_EQ(Rank(m.n_mat), m.s);
    EXPECT_EQ(Rank(VStack(m.gamma, m.n_mat)), rank);
    EXPECT_EQ(Rank(m.w_mat), m.n - rank);
    if (m.d > 0) EXPECT_TRUE((m.w_mat * m.gamma).IsZero());
  }
}

TEST(MatricesFromRawTest, AcceptsNegativeExponents) {
  const NetworkMatrices m = MatricesFromRaw(RatMatrix::FromRows({{1, -1}}),
                                            RatMatrix::FromRows({{-1, 2}, {0, 1}}),
                                            RatMatrix::FromRows({{1, 1}}));
  EXPECT_EQ(m.n, 2u);
  EXPECT_EQ(m.r, 2u);
  EXPECT_EQ(m.s, 1u);
  EXPECT_EQ(m.d, 1u);
}

TEST(MatricesFromRawTest, RejectsInconsistentShapes) {
  EXPECT_THROW(MatricesFromRaw(RatMatrix::FromRows({{1, -1}}),
                               RatMatrix::FromRows({{1, 0}, {0, 1}}), RatMatrix(0, 2)),
               std::invalid_argument);
  EXPECT_THROW(MatricesFromRaw(RatMatrix::FromRows({{1, -1}, {2, -2}}),
                               RatMatrix::FromRows({{1, 0}, {0, 1}}), RatMatrix(0, 2)),
               std::invalid_argument);
}

}  // namespace
}  // namespace steadydim
