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
#include "steadydim/nondegen.h"

#include <algorithm>
#include <future>
#include <utility>

namespace steadydim {
namespace {

constexpr std::size_t kCertificateListLimit = 64;
constexpr std::uint64_t kMaxSampleBound = std::uint64_t{1} << 62;

Rational PowInt(const Rational& base, const Rational& exponent) {
  if (exponent.get_den() != 1 || !exponent.get_num().fits_slong_p()) {
    throw std::invalid_argument("reactant exponents must be small integers");
  }
  long e = exponent.get_num().get_si();
  const bool invert = e < 0;
  unsigned long k = static_cast<unsigned long>(invert ? -e : e);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), k);
  Rational out = invert ? Rational(den, num) : Rational(num, den);
  out.canonicalize();
  return out;
}

std::string IndexList(const std::vector<std::size_t>& idx) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(idx[i] + 1);
  }
  return s;
}

Point DrawPoint(Sampler& rng, const VarContext& vars, std::uint64_t bound) {
  Point p;
  for (std::size_t i = 0; i < vars.num_u; ++i) {
    p.emplace(VarId::U(static_cast<std::uint32_t>(i)),
              Rational(rng.NonzeroSymmetric(bound)));
  }
  for (std::size_t i = 0; i < vars.num_h; ++i) {
    p.emplace(VarId::H(static_cast<std::uint32_t>(i)), Rational(rng.Positive(bound)));
  }
  return p;
}

void SetWitness(GenericRankVerdict& v, const Point& p, const VarContext& vars) {
  RationalVector u(vars.num_u), h(vars.num_h);
  for (std::size_t i = 0; i < vars.num_u; ++i) {
    u[i] = p.at(VarId::U(static_cast<std::uint32_t>(i)));
  }
  for (std::size_t i = 0; i < vars.num_h; ++i) {
    h[i] = p.at(VarId::H(static_cast<std::uint32_t>(i)));
  }
  v.status = GenericRankVerdict::Status::NondegenerateExists;
  v.witness_u = std::move(u);
  if (vars.num_h > 0) v.witness_h = std::move(h);
}

void CheckLengths(const NetworkMatrices& mats, const RationalVector& kappa,
                  const RationalVector& x) {
  if (kappa.size() != mats.r) {
    throw DimensionMismatch("kappa has " + std::to_string(kappa.size()) +
                            " entries, expected " + std::to_string(mats.r));
  }
  if (x.size() != mats.n) {
    throw DimensionMismatch("x has " + std::to_string(x.size()) +
                            " entries, expected " + std::to_string(mats.n));
  }
  for (std::size_t i = 0; i < kappa.size(); ++i) {
    if (sgn(kappa[i]) <= 0) {
      throw DomainViolation("kappa_" + std::to_string(i + 1) + " must be positive");
    }
  }
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (sgn(x[j]) == 0) {
      throw DomainViolation("x_" + std::to_string(j + 1) + " must be nonzero");
    }
  }
}

// kappa o x^B
RationalVector ReactionRates(const NetworkMatrices& mats,
                             const RationalVector& kappa, const RationalVector& x) {
  RationalVector rates(mats.r);
  for (std::size_t k = 0; k < mats.r; ++k) {
    Rational v = kappa[k];
    for (std::size_t j = 0; j < mats.n; ++j) {
      if (sgn(mats.b(j, k)) != 0) v *= PowInt(x[j], mats.b(j, k));
    }
    rates[k] = std::move(v);
  }
  return rates;
}

}  // namespace

PolyMatrix SteadyStateJacobian(const NetworkMatrices& mats, const RatMatrix& g) {
  if (g.rows() != mats.r) {
    throw DimensionMismatch("kernel parametrization must have one row per reaction");
  }
  std::vector<MPoly> gu(mats.r);
  for (std::size_t k = 0; k < mats.r; ++k) {
    for (std::size_t l = 0; l < g.cols(); ++l) {
      if (sgn(g(k, l)) != 0) {
        gu[k] += MPoly::Term(g(k, l), Monomial(VarId::U(static_cast<std::uint32_t>(l))));
      }
    }
  }
  PolyMatrix j(mats.s, mats.n);
  for (std::size_t i = 0; i < mats.s; ++i) {
    for (std::size_t col = 0; col < mats.n; ++col) {
      MPoly e;
      for (std::size_t k = 0; k < mats.r; ++k) {
        const Rational& nik = mats.n_mat(i, k);
        const Rational& bjk = mats.b(col, k);
        if (sgn(nik) == 0 || sgn(bjk) == 0) continue;
        e += MPoly(Rational(nik * bjk)) * gu[k];
      }
      j(i, col) = std::move(e);
    }
  }
  return j;
}

PolyMatrix StackedJacobian(const NetworkMatrices& mats, const RatMatrix& g) {
  const PolyMatrix top = SteadyStateJacobian(mats, g);
  PolyMatrix out(mats.s + mats.d, mats.n);
  for (std::size_t i = 0; i < mats.s; ++i) {
    for (std::size_t j = 0; j < mats.n; ++j) {
      if (!top(i, j).is_zero()) {
        out(i, j) = top(i, j) * MPoly::Var(VarId::H(static_cast<std::uint32_t>(j)));
      }
    }
  }
  for (std::size_t i = 0; i < mats.d; ++i) {
    for (std::size_t j = 0; j < mats.n; ++j) out(mats.s + i, j) = MPoly(mats.w_mat(i, j));
  }
  return out;
}

GenericRankVerdict GenericRankTest(const PolyMatrix& m, std::size_t target,
                                   const VarContext& vars,
                                   const SamplerConfig& cfg,
                                   std::uint64_t stream_seed) {
  cfg.Validate();
  if (target > std::min(m.rows(), m.cols())) {
    throw std::invalid_argument("target rank exceeds matrix dimensions");
  }
  Sampler rng(stream_seed);
  GenericRankVerdict v;
  v.target_rank = target;

  for (std::size_t t = 0; t < cfg.retries; ++t) {
    Point p = DrawPoint(rng, vars, cfg.sample_bound);
    ++v.samples_tried;
    if (Rank(m.Evaluate(p)) >= target) {
      SetWitness(v, p, vars);
      return v;
    }
  }

  MinorSearch search =
      AllMinorsZero(m, target, cfg.symbolic_threshold, kCertificateListLimit);
  if (search.all_zero) {
    v.status = GenericRankVerdict::Status::AllDegenerate;
    std::vector<std::string> cert;
    cert.push_back("all " + std::to_string(target) + "x" + std::to_string(target) +
                   " minors of the " + std::to_string(m.rows()) + "x" +
                   std::to_string(m.cols()) +
                   " symbolic matrix are identically zero (" +
                   std::to_string(search.minors_checked) +
                   (search.minors_checked == 1 ? " minor" : " minors") + " expanded)");
    for (const auto& [rows, cols] : search.zero_minors) {
      cert.push_back("det[rows " + IndexList(rows) + "; cols " + IndexList(cols) +
                     "] = 0");
    }
    if (search.minors_checked > search.zero_minors.size()) {
      cert.push_back("... " +
                     std::to_string(search.minors_checked - search.zero_minors.size()) +
                     " further minors = 0");
    }
    v.certificate = std::move(cert);
    return v;
  }

  // Sample the nonzero minor until it does not vanish.
  const MPoly& minor = search.witness->value;
  std::uint64_t bound = cfg.sample_bound;
  for (std::size_t round = 0;; ++round) {
    if (cfg.max_pit_rounds != 0 && round >= cfg.max_pit_rounds) {
      throw BudgetExhausted("no nonvanishing point found for minor " + ToString(minor));
    }
    for (std::size_t t = 0; t < cfg.pit_budget; ++t) {
      Point p = DrawPoint(rng, vars, bound);
      ++v.samples_tried;
      if (sgn(minor.Eval(p)) == 0) continue;
      if (Rank(m.Evaluate(p)) < target) {
        throw std::logic_error("nonzero minor but rank below target");
      }
      SetWitness(v, p, vars);
      return v;
    }
    bound = std::min(bound * 2, kMaxSampleBound);
  }
}

RationalVector EvaluateF(const NetworkMatrices& mats, const RationalVector& kappa,
                         const RationalVector& x) {
  CheckLengths(mats, kappa, x);
  return mats.n_mat * ReactionRates(mats, kappa, x);
}

SteadyStateCheck CheckSteadyState(const NetworkMatrices& mats,
                                  const RationalVector& kappa,
                                  const RationalVector& x) {
  CheckLengths(mats, kappa, x);
  SteadyStateCheck c;
  c.kappa = kappa;
  c.x = x;
  c.n = mats.n;
  const RationalVector rates = ReactionRates(mats, kappa, x);
  c.residual = mats.n_mat * rates;
  c.residual_zero = std::all_of(c.residual.begin(), c.residual.end(),
                                [](const Rational& q) { return sgn(q) == 0; });
  RationalVector inv_x(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) inv_x[j] = 1 / x[j];
  c.jacobian = mats.n_mat * RatMatrix::Diagonal(rates) * mats.b.Transpose() *
               RatMatrix::Diagonal(inv_x);
  if (mats.s == 0) c.jacobian = RatMatrix(0, mats.n);
  c.stacked_rank = Rank(VStack(c.jacobian, mats.w_mat));
  c.degenerate = c.stacked_rank < mats.n;
  return c;
}

AnalysisReport Analyze(const NetworkMatrices& mats, const SamplerConfig& cfg) {
  cfg.Validate();
  AnalysisReport rep;
  rep.n = mats.n;
  rep.r = mats.r;
  rep.s = mats.s;
  rep.d = mats.d;

  rep.cone = PositiveKernelVector(mats.n_mat);

  const RatMatrix g = KernelBasis(mats.n_mat);
  const VarContext f_vars{g.cols(), 0};
  const VarContext big_f_vars{g.cols(), mats.n};

  auto f_task = std::async(std::launch::async, [&] {
    return GenericRankTest(SteadyStateJacobian(mats, g), mats.s, f_vars, cfg,
                           MixSeed(cfg.seed, 1));
  });
  rep.F_verdict = GenericRankTest(StackedJacobian(mats, g), mats.n, big_f_vars, cfg,
                                  MixSeed(cfg.seed, 2));
  rep.f_verdict = f_task.get();

  for (GenericRankVerdict* v : {&rep.f_verdict, &rep.F_verdict}) {
    if (v->witness_u) v->witness_w = g * *v->witness_u;
  }

  if (rep.F_verdict.nondegenerate() && !rep.f_verdict.nondegenerate()) {
    throw std::logic_error("F-test succeeded while the f-test failed");
  }

  if (!rep.cone.exists()) {
    rep.conclusion_f = DimensionConclusion::NoPositiveSteadyStates;
    rep.conclusion_F = FinitenessConclusion::NoPositiveSteadyStates;
    rep.notes.push_back(
        "ker(N) contains no strictly positive vector: there are no positive "
        "steady states for any rate constants");
    rep.notes.push_back(
        "rank tests were run over the unrestricted kernel and only describe "
        "solutions in the complex torus");
  } else {
    rep.conclusion_f = rep.f_verdict.nondegenerate()
                           ? DimensionConclusion::GenericDimensionNminusS
                           : DimensionConclusion::EmptyOrHigherDimensional;
    rep.conclusion_F = rep.F_verdict.nondegenerate()
                           ? FinitenessConclusion::GenericallyFinite
                           : FinitenessConclusion::GenericallyEmptyOrInfinite;
    rep.notes.push_back(
        "with kappa equal to the cone witness, x = (1,...,1) is a positive steady state");
    if (rep.f_verdict.nondegenerate()) {
      rep.notes.push_back(
          "positive steady states exist for rate constants in a set with nonempty "
          "interior; for almost all such rate constants the steady state variety has "
          "dimension " + std::to_string(mats.n - mats.s));
    } else {
      rep.notes.push_back(
          "every steady state is degenerate; for almost all rate constants there are "
          "no positive steady states");
    }
    if (rep.F_verdict.nondegenerate()) {
      rep.notes.push_back(
          "for almost all rate constants and conservation totals the steady states "
          "in a compatibility class are finitely many and all nondegenerate");
    }
  }
  if (mats.s == 0) {
    rep.notes.push_back(
        "the stoichiometric matrix is zero: f is the empty system and every x is a "
        "steady state");
  }
  return rep;
}

AnalysisReport Analyze(const ReactionNetwork& net, const SamplerConfig& cfg) {
  AnalysisReport rep = Analyze(BuildMatrices(net), cfg);
  rep.species = net.species;
  for (const auto& r : net.reactions) rep.reactions.push_back(RenderReaction(net, r));
  return rep;
}

std::string ToString(GenericRankVerdict::Status s) {
  return s == GenericRankVerdict::Status::NondegenerateExists ? "NondegenerateExists"
                                                             : "AllDegenerate";
}

std::string ToString(DimensionConclusion c) {
  switch (c) {
    case DimensionConclusion::GenericDimensionNminusS:
      return "GenericDimensionNminusS";
    case DimensionConclusion::EmptyOrHigherDimensional:
      return "EmptyOrHigherDimensional";
    case DimensionConclusion::NoPositiveSteadyStates:
      return "NoPositiveSteadyStates";
  }
  return "";
}

std::string ToString(FinitenessConclusion c) {
  switch (c) {
    case FinitenessConclusion::GenericallyFinite:
      return "GenericallyFinite";
    case FinitenessConclusion::GenericallyEmptyOrInfinite:
      return "GenericallyEmptyOrInfinite";
    case FinitenessConclusion::NoPositiveSteadyStates:
      return "NoPositiveSteadyStates";
  }
  return "";
}

}  // namespace steadydim
