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
#ifndef STEADYDIM_NONDEGEN_H_
#define STEADYDIM_NONDEGEN_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "steadydim/cone.h"
#include "steadydim/mpoly.h"
#include "steadydim/network.h"
#include "steadydim/ratmat.h"
#include "steadydim/sampler.h"

namespace steadydim {

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point outside the domain of the steady-state map (zero concentration,
/// non-positive rate constant).
class DomainViolation : public DimensionMismatch {
 public:
  using DimensionMismatch::DimensionMismatch;
};

class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Number of U and H indeterminates a sample point must assign.
struct VarContext {
  std::size_t num_u = 0;
  std::size_t num_h = 0;
};

struct GenericRankVerdict {
  enum class Status { NondegenerateExists, AllDegenerate };

  std::size_t target_rank = 0;
  Status status = Status::AllDegenerate;
  std::optional<RationalVector> witness_u;
  std::optional<RationalVector> witness_h;
  std::optional<RationalVector> witness_w;  // G * witness_u
  std::optional<std::vector<std::string>> certificate;
  std::size_t samples_tried = 0;

  bool nondegenerate() const { return status == Status::NondegenerateExists; }
  friend bool operator==(const GenericRankVerdict&,
                         const GenericRankVerdict&) = default;
};

struct SteadyStateCheck {
  RationalVector kappa;
  RationalVector x;
  RationalVector residual;  // N (kappa o x^B)
  bool residual_zero = false;
  RatMatrix jacobian;  // s x n
  std::size_t stacked_rank = 0;
  std::size_t n = 0;
  bool degenerate = false;
};

enum class DimensionConclusion {
  GenericDimensionNminusS,
  EmptyOrHigherDimensional,
  NoPositiveSteadyStates,
};

enum class FinitenessConclusion {
  GenericallyFinite,
  GenericallyEmptyOrInfinite,
  NoPositiveSteadyStates,
};

struct AnalysisReport {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t s = 0;
  std::size_t d = 0;
  std::vector<std::string> species;
  std::vector<std::string> reactions;
  ConeResult cone;
  GenericRankVerdict f_verdict;
  GenericRankVerdict F_verdict;
  DimensionConclusion conclusion_f = DimensionConclusion::NoPositiveSteadyStates;
  FinitenessConclusion conclusion_F = FinitenessConclusion::NoPositiveSteadyStates;
  std::vector<std::string> notes;

  friend bool operator==(const AnalysisReport&, const AnalysisReport&) = default;
};

/// N diag(G u) B^T as an s x n matrix of polynomials linear in u, where the
/// columns of g span ker(N).
PolyMatrix SteadyStateJacobian(const NetworkMatrices& mats, const RatMatrix& g);

/// [N diag(G u) B^T diag(h); W], an n x n polynomial matrix.
PolyMatrix StackedJacobian(const NetworkMatrices& mats, const RatMatrix& g);

/// Decides whether the polynomial matrix m reaches rank target somewhere.
///
/// First cfg.retries random points are tried (u-coordinates nonzero in
/// [-H, H], h-coordinates in [1, H]); a point of full rank is a witness. If
/// every sample is rank deficient, the k x k minors are expanded
/// symbolically. All of them vanishing is a proof that the generic rank is
/// below target. Otherwise the first nonzero minor is sampled until it does
/// not vanish, doubling H every cfg.pit_budget misses. Any witness is
/// re-checked by an exact rank computation before it is returned.
///
/// The result depends only on (m, target, vars, cfg, stream_seed).
GenericRankVerdict GenericRankTest(const PolyMatrix& m, std::size_t target,
                                   const VarContext& vars,
                                   const SamplerConfig& cfg,
                                   std::uint64_t stream_seed);

/// N (kappa o x^B), with (x^B)_i = prod_j x_j^{B_ji}. Throws
/// DimensionMismatch on length mismatch and DomainViolation for a zero x_j or
/// a non-positive kappa_i.
RationalVector EvaluateF(const NetworkMatrices& mats,
                         const RationalVector& kappa, const RationalVector& x);

/// Jacobian N diag(kappa o x^B) B^T diag(x^-1) and the rank of its stack
/// with W. Computed even when x is not a steady state (residual_zero is then
/// false).
SteadyStateCheck CheckSteadyState(const NetworkMatrices& mats,
                                  const RationalVector& kappa,
                                  const RationalVector& x);

AnalysisReport Analyze(const NetworkMatrices& mats, const SamplerConfig& cfg);
AnalysisReport Analyze(const ReactionNetwork& net, const SamplerConfig& cfg);

std::string ToString(GenericRankVerdict::Status s);
std::string ToString(DimensionConclusion c);
std::string ToString(FinitenessConclusion c);

}  // namespace steadydim

#endif  // STEADYDIM_NONDEGEN_H_
