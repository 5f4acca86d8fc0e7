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

#include <cmath>
#include <stdexcept>
#include <utility>

namespace steadydim {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("RatMatrix: entry count does not match shape");
  }
}

RatMatrix RatMatrix::FromRows(
    std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  std::vector<Rational> e;
  e.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw std::invalid_argument("RatMatrix: ragged rows");
    for (long x : row) e.emplace_back(x);
  }
  return RatMatrix(r, c, std::move(e));
}

RatMatrix RatMatrix::FromRowVectors(const std::vector<RationalVector>& rows,
                                    std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw std::invalid_argument("RatMatrix: ragged rows");
    }
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::Identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::Diagonal(std::span<const Rational> d) {
  RatMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

RatMatrix RatMatrix::Column(std::span<const Rational> v) {
  return RatMatrix(v.size(), 1, std::vector<Rational>(v.begin(), v.end()));
}

RationalVector RatMatrix::column(std::size_t j) const {
  RationalVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

RatMatrix RatMatrix::Transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

bool RatMatrix::IsZero() const {
  for (const auto& q : entries_) {
    if (sgn(q) != 0) return false;
  }
  return true;
}

bool RatMatrix::IsIntegral() const {
  for (const auto& q : entries_) {
    if (q.get_den() != 1) return false;
  }
  return true;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("RatMatrix product: inner dimensions differ");
  }
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

RationalVector operator*(const RatMatrix& a, std::span<const Rational> v) {
  if (a.cols() != v.size()) {
    throw std::invalid_argument("RatMatrix-vector product: size mismatch");
  }
  RationalVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) != 0 && sgn(v[k]) != 0) out[i] += a(i, k) * v[k];
    }
  }
  return out;
}

RatMatrix VStack(const RatMatrix& top, const RatMatrix& bottom) {
  if (top.rows() == 0 && top.cols() == 0) return bottom;
  if (bottom.rows() == 0 && bottom.cols() == 0) return top;
  if (top.cols() != bottom.cols()) {
    throw std::invalid_argument("VStack: column counts differ");
  }
  std::vector<Rational> e(top.entries());
  e.insert(e.end(), bottom.entries().begin(), bottom.entries().end());
  return RatMatrix(top.rows() + bottom.rows(), top.cols(), std::move(e));
}

RatMatrix HStack(const RatMatrix& left, const RatMatrix& right) {
  return VStack(left.Transpose(), right.Transpose()).Transpose();
}

std::string ToString(const RatMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += ToString(m(i, j));
    }
    out += '\n';
  }
  return out;
}

RrefResult Rref(const RatMatrix& m) {
  RrefResult res{m, {}, 0};
  RatMatrix& a = res.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t i = lead; i < rows; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      if (best == rows || abs(a(i, c)) > abs(a(best, c))) best = i;
    }
    if (best == rows) continue;
    if (best != lead) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(lead, j), a(best, j));
    }
    const Rational inv = 1 / a(lead, c);
    for (std::size_t j = c; j < cols; ++j) a(lead, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == lead || sgn(a(i, c)) == 0) continue;
      const Rational factor = a(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(a(lead, j)) != 0) a(i, j) -= factor * a(lead, j);
      }
    }
    res.pivots.push_back(c);
    ++lead;
  }
  res.rank = res.pivots.size();
  return res;
}

std::size_t Rank(const RatMatrix& m) { return Rref(m).rank; }

RatMatrix KernelBasis(const RatMatrix& m) {
  const RrefResult rr = Rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : rr.pivots) is_pivot[p] = true;

  RatMatrix basis(cols, cols - rr.rank);
  std::size_t k = 0;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < rr.rank; ++i) v[rr.pivots[i]] = -rr.reduced(i, free);
    v = PrimitiveIntegerVector(v);
    for (std::size_t j = 0; j < cols; ++j) basis(j, k) = v[j];
    ++k;
  }
  return basis;
}

RatMatrix RowBasis(const RatMatrix& m) {
  const RrefResult rr = Rref(m);
  RatMatrix out(rr.rank, m.cols());
  for (std::size_t i = 0; i < rr.rank; ++i) {
    RationalVector v = PrimitiveIntegerVector(rr.reduced.row(i));
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = v[j];
  }
  return out;
}

RatMatrix LeftKernelBasis(const RatMatrix& m) {
  return KernelBasis(m.Transpose()).Transpose();
}

bool InColumnSpan(const RatMatrix& m, std::span<const Rational> v) {
  if (m.rows() != v.size()) {
    throw std::invalid_argument("InColumnSpan: size mismatch");
  }
  return Rank(HStack(m, RatMatrix::Column(v))) == Rank(m);
}

}  // namespace steadydim
