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
#ifndef STEADYDIM_MPOLY_H_
#define STEADYDIM_MPOLY_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "steadydim/rational.h"
#include "steadydim/ratmat.h"

namespace steadydim {

/// Indeterminates of the symbolic Jacobians: U-variables parametrize the
/// kernel of N, H-variables scale the columns of the F-Jacobian.
struct VarId {
  enum class Kind : std::uint8_t { U = 0, H = 1 };
  Kind kind = Kind::U;
  std::uint32_t index = 0;

  static VarId U(std::uint32_t i) { return {Kind::U, i}; }
  static VarId H(std::uint32_t i) { return {Kind::H, i}; }

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

/// "u1", "h3" (1-based in text).
std::string ToString(VarId v);

/// Sparse power product, sorted by VarId, no zero exponents.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(VarId v, std::uint32_t exp = 1);

  const std::vector<std::pair<VarId, std::uint32_t>>& factors() const {
    return factors_;
  }
  std::uint32_t degree() const { return degree_; }
  bool is_one() const { return factors_.empty(); }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Some(a / b) if b divides a.
  friend std::optional<Monomial> Divide(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<VarId, std::uint32_t>> factors_;
  std::uint32_t degree_ = 0;
};

/// Graded lexicographic order with u1 > u2 > ... > h1 > h2 > ...
/// Returns true when a is strictly greater than b.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

class MissingAssignment : public std::invalid_argument {
 public:
  explicit MissingAssignment(VarId v)
      : std::invalid_argument("no value assigned to " + ToString(v)), var(v) {}
  VarId var;
};

using Point = std::map<VarId, Rational>;

/// Sparse multivariate polynomial over Q. Terms are kept in descending grlex
/// order; zero coefficients are never stored.
class MPoly {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT: implicit constant embedding
  MPoly(long c) : MPoly(Rational(c)) {}  // NOLINT
  static MPoly Var(VarId v);
  static MPoly Term(const Rational& c, Monomial m);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t size() const { return terms_.size(); }
  std::uint32_t total_degree() const;
  std::vector<VarId> variables() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// Throws MissingAssignment for any variable of p absent from point.
  Rational Eval(const Point& point) const;

  /// Exact quotient p / d. Throws std::domain_error if d is zero or does not
  /// divide p.
  friend MPoly DivideExact(const MPoly& p, const MPoly& d);

 private:
  void AddTerm(const Monomial& m, const Rational& c);
  Terms terms_;
};

/// Canonical rendering, e.g. "2*u1*h3 - 1/2*u2^2"; zero renders as "0".
std::string ToString(const MPoly& p);

/// Dense row-major matrix of polynomials.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  static PolyMatrix FromRational(const RatMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  MPoly& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const MPoly& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }
  std::size_t RowNonzeros(std::size_t i) const;
  std::size_t ColNonzeros(std::size_t j) const;
  std::vector<VarId> variables() const;

  RatMatrix Evaluate(const Point& point) const;

  /// Submatrix on the given (ordered) row and column index lists.
  PolyMatrix Submatrix(const std::vector<std::size_t>& rows,
                       const std::vector<std::size_t>& cols) const;

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<MPoly> entries_;
};

inline constexpr std::size_t kDefaultCofactorLimit = 6;

/// Determinant of a square polynomial matrix; 0x0 gives 1. Uses cofactor
/// expansion along the sparsest row up to cofactor_limit, fraction-free
/// Bareiss elimination above it.
MPoly Det(const PolyMatrix& m, std::size_t cofactor_limit = kDefaultCofactorLimit);
MPoly DetCofactor(const PolyMatrix& m);
MPoly DetBareiss(const PolyMatrix& m);

struct Minor {
  std::vector<std::size_t> rows;  // indices into the original matrix, sorted
  std::vector<std::size_t> cols;
  MPoly value;
};

struct MinorSearch {
  bool all_zero = true;
  std::optional<Minor> witness;  // first nonzero minor when !all_zero
  std::size_t minors_checked = 0;
  /// Index sets of vanishing minors, in visiting order, up to record_limit.
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
      zero_minors;
};

/// Decides whether every k x k minor of m is the zero polynomial. Rows and
/// columns are visited sorted by ascending nonzero count (ties by index);
/// subsets are enumerated lexicographically in that order and the search
/// stops at the first nonzero minor.
MinorSearch AllMinorsZero(const PolyMatrix& m, std::size_t k,
                          std::size_t cofactor_limit = kDefaultCofactorLimit,
                          std::size_t record_limit = 0);

}  // namespace steadydim

#endif  // STEADYDIM_MPOLY_H_
