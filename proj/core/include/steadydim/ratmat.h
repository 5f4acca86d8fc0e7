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
#ifndef STEADYDIM_RATMAT_H_
#define STEADYDIM_RATMAT_H_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "steadydim/rational.h"

namespace steadydim {

/// Dense row-major matrix over the rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  /// Integer literal helper: RatMatrix::FromRows({{1, -2, 1}, {-1, 2, -1}}).
  static RatMatrix FromRows(
      std::initializer_list<std::initializer_list<long>> rows);
  static RatMatrix FromRowVectors(const std::vector<RationalVector>& rows,
                                  std::size_t cols);
  static RatMatrix Identity(std::size_t n);
  static RatMatrix Diagonal(std::span<const Rational> d);
  static RatMatrix Column(std::span<const Rational> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) {
    return entries_[i * cols_ + j];
  }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * cols_ + j];
  }

  std::span<const Rational> row(std::size_t i) const {
    return {entries_.data() + i * cols_, cols_};
  }
  RationalVector column(std::size_t j) const;
  const std::vector<Rational>& entries() const { return entries_; }

  RatMatrix Transpose() const;
  bool IsZero() const;
  bool IsIntegral() const;

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Throws std::invalid_argument on shape mismatch.
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RationalVector operator*(const RatMatrix& a, std::span<const Rational> v);

/// [top; bottom]. Either block may have zero rows; column counts must agree
/// unless one block is 0x0.
RatMatrix VStack(const RatMatrix& top, const RatMatrix& bottom);
/// [left | right].
RatMatrix HStack(const RatMatrix& left, const RatMatrix& right);

/// Rows as text, one row per line, entries separated by single spaces.
std::string ToString(const RatMatrix& m);

struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivots;  // strictly increasing column indices
  std::size_t rank = 0;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination. The pivot row
/// in each column is the candidate of largest absolute value; the result is
/// unique regardless.
RrefResult Rref(const RatMatrix& m);

std::size_t Rank(const RatMatrix& m);

/// Columns form a basis of {v : m v = 0}; each column is a primitive integer
/// vector whose free-variable coordinate is positive.
RatMatrix KernelBasis(const RatMatrix& m);

/// rank(m) rows spanning the row space of m: the nonzero rows of rref(m)
/// rescaled to primitive integer vectors.
RatMatrix RowBasis(const RatMatrix& m);

/// Rows form a basis of {y : y^T m = 0}, as primitive integer vectors.
RatMatrix LeftKernelBasis(const RatMatrix& m);

/// True iff v lies in the column span of m.
bool InColumnSpan(const RatMatrix& m, std::span<const Rational> v);

}  // namespace steadydim

#endif  // STEADYDIM_RATMAT_H_
