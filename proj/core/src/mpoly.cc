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
#include "steadydim/mpoly.h"

#include <algorithm>
#include <numeric>

namespace steadydim {
namespace {

Rational Pow(const Rational& base, std::uint32_t e) {
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  return Rational(num, den);
}

// Advances idx (strictly increasing, values < n) to the next k-combination in
// lexicographic order. Returns false after the last one.
bool NextCombination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

MPoly CofactorRec(const PolyMatrix& m, const std::vector<std::size_t>& rows,
                  const std::vector<std::size_t>& cols) {
  const std::size_t k = rows.size();
  if (k == 0) return MPoly(1);
  if (k == 1) return m(rows[0], cols[0]);
  if (k == 2) {
    return m(rows[0], cols[0]) * m(rows[1], cols[1]) -
           m(rows[0], cols[1]) * m(rows[1], cols[0]);
  }
  std::size_t best = 0;
  std::size_t best_nz = k + 1;
  for (std::size_t p = 0; p < k; ++p) {
    std::size_t nz = 0;
    for (std::size_t c : cols) nz += m(rows[p], c).is_zero() ? 0 : 1;
    if (nz < best_nz) {
      best_nz = nz;
      best = p;
    }
    if (nz == 0) return MPoly();
  }
  std::vector<std::size_t> sub_rows;
  sub_rows.reserve(k - 1);
  for (std::size_t p = 0; p < k; ++p) {
    if (p != best) sub_rows.push_back(rows[p]);
  }
  MPoly result;
  std::vector<std::size_t> sub_cols(k - 1);
  for (std::size_t q = 0; q < k; ++q) {
    const MPoly& e = m(rows[best], cols[q]);
    if (e.is_zero()) continue;
    std::size_t t = 0;
    for (std::size_t c = 0; c < k; ++c) {
      if (c != q) sub_cols[t++] = cols[c];
    }
    MPoly minor = CofactorRec(m, sub_rows, sub_cols);
    if (minor.is_zero()) continue;
    if ((best + q) % 2 == 0) {
      result += e * minor;
    } else {
      result -= e * minor;
    }
  }
  return result;
}

std::vector<std::size_t> SparseFirstOrder(std::size_t n,
                                          const std::vector<std::size_t>& nnz) {
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return nnz[a] < nnz[b];
  });
  return order;
}

}  // namespace

std::string ToString(VarId v) {
  return (v.kind == VarId::Kind::U ? "u" : "h") + std::to_string(v.index + 1);
}

Monomial::Monomial(VarId v, std::uint32_t exp) {
  if (exp > 0) {
    factors_.emplace_back(v, exp);
    degree_ = exp;
  }
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.factors_.reserve(a.factors_.size() + b.factors_.size());
  auto i = a.factors_.begin();
  auto j = b.factors_.begin();
  while (i != a.factors_.end() || j != b.factors_.end()) {
    if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
      out.factors_.push_back(*i++);
    } else if (i == a.factors_.end() || j->first < i->first) {
      out.factors_.push_back(*j++);
    } else {
      out.factors_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

std::optional<Monomial> Divide(const Monomial& a, const Monomial& b) {
  Monomial out;
  auto i = a.factors_.begin();
  for (const auto& [v, e] : b.factors_) {
    while (i != a.factors_.end() && i->first < v) out.factors_.push_back(*i++);
    if (i == a.factors_.end() || i->first != v || i->second < e) {
      return std::nullopt;
    }
    if (i->second > e) out.factors_.emplace_back(v, i->second - e);
    ++i;
  }
  while (i != a.factors_.end()) out.factors_.push_back(*i++);
  out.degree_ = a.degree_ - b.degree_;
  return out;
}

bool GrlexGreater::operator()(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() > b.degree();
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  for (; i < fa.size() && i < fb.size(); ++i) {
    if (fa[i].first != fb[i].first) return fa[i].first < fb[i].first;
    if (fa[i].second != fb[i].second) return fa[i].second > fb[i].second;
  }
  return i < fa.size();
}

MPoly::MPoly(const Rational& c) {
  if (sgn(c) != 0) terms_.emplace(Monomial(), c);
}

MPoly MPoly::Var(VarId v) { return Term(Rational(1), Monomial(v)); }

MPoly MPoly::Term(const Rational& c, Monomial m) {
  MPoly p;
  if (sgn(c) != 0) p.terms_.emplace(std::move(m), c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

std::uint32_t MPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

std::vector<VarId> MPoly::variables() const {
  std::vector<VarId> vars;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m.factors()) vars.push_back(v);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

void MPoly::AddTerm(const Monomial& m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

MPoly MPoly::operator-() const {
  MPoly out(*this);
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) AddTerm(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) AddTerm(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.AddTerm(ma * mb, ca * cb);
  }
  return out;
}

Rational MPoly::Eval(const Point& point) const {
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (const auto& [v, e] : m.factors()) {
      auto it = point.find(v);
      if (it == point.end()) throw MissingAssignment(v);
      t *= e == 1 ? it->second : Pow(it->second, e);
    }
    sum += t;
  }
  return sum;
}

MPoly DivideExact(const MPoly& p, const MPoly& d) {
  if (d.is_zero()) throw std::domain_error("MPoly division by zero");
  const auto& [lead_m, lead_c] = *d.terms_.begin();
  MPoly rem = p;
  MPoly quot;
  while (!rem.is_zero()) {
    const auto& [rm, rc] = *rem.terms_.begin();
    auto q = Divide(rm, lead_m);
    if (!q) throw std::domain_error("MPoly division is not exact");
    MPoly t = MPoly::Term(rc / lead_c, *q);
    rem -= t * d;
    quot += t;
  }
  return quot;
}

std::string ToString(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    const bool neg = sgn(c) < 0;
    if (first) {
      if (neg) out += '-';
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    const Rational mag = abs(c);
    std::string mono;
    for (const auto& [v, e] : m.factors()) {
      if (!mono.empty()) mono += '*';
      mono += ToString(v);
      if (e > 1) mono += '^' + std::to_string(e);
    }
    if (mono.empty()) {
      out += ToString(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += ToString(mag) + '*' + mono;
    }
  }
  return out;
}

PolyMatrix PolyMatrix::FromRational(const RatMatrix& m) {
  PolyMatrix p(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = MPoly(m(i, j));
  }
  return p;
}

std::size_t PolyMatrix::RowNonzeros(std::size_t i) const {
  std::size_t nz = 0;
  for (std::size_t j = 0; j < cols_; ++j) nz += (*this)(i, j).is_zero() ? 0 : 1;
  return nz;
}

std::size_t PolyMatrix::ColNonzeros(std::size_t j) const {
  std::size_t nz = 0;
  for (std::size_t i = 0; i < rows_; ++i) nz += (*this)(i, j).is_zero() ? 0 : 1;
  return nz;
}

std::vector<VarId> PolyMatrix::variables() const {
  std::vector<VarId> vars;
  for (const auto& e : entries_) {
    auto v = e.variables();
    vars.insert(vars.end(), v.begin(), v.end());
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

RatMatrix PolyMatrix::Evaluate(const Point& point) const {
  RatMatrix out(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).Eval(point);
  }
  return out;
}

PolyMatrix PolyMatrix::Submatrix(const std::vector<std::size_t>& rows,
                                 const std::vector<std::size_t>& cols) const {
  PolyMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out(i, j) = (*this)(rows[i], cols[j]);
    }
  }
  return out;
}

MPoly DetCofactor(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("Det: matrix not square");
  std::vector<std::size_t> idx(m.rows());
  std::iota(idx.begin(), idx.end(), 0);
  return CofactorRec(m, idx, idx);
}

MPoly DetBareiss(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("Det: matrix not square");
  const std::size_t n = m.rows();
  if (n == 0) return MPoly(1);
  std::vector<std::vector<MPoly>> a(n, std::vector<MPoly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  }
  bool negate = false;
  MPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Pivot with the fewest terms.
    std::size_t piv = n;
    for (std::size_t i = k; i < n; ++i) {
      if (a[i][k].is_zero()) continue;
      if (piv == n || a[i][k].size() < a[piv][k].size()) piv = i;
    }
    if (piv == n) return MPoly();
    if (piv != k) {
      std::swap(a[piv], a[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        a[i][j] = prev == MPoly(1) ? std::move(num) : DivideExact(num, prev);
      }
      a[i][k] = MPoly();
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

MPoly Det(const PolyMatrix& m, std::size_t cofactor_limit) {
  return m.rows() <= cofactor_limit ? DetCofactor(m) : DetBareiss(m);
}

MinorSearch AllMinorsZero(const PolyMatrix& m, std::size_t k,
                          std::size_t cofactor_limit, std::size_t record_limit) {
  if (k > std::min(m.rows(), m.cols())) {
    throw std::invalid_argument("AllMinorsZero: minor size exceeds matrix");
  }
  MinorSearch out;
  std::vector<std::size_t> row_nnz(m.rows()), col_nnz(m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) row_nnz[i] = m.RowNonzeros(i);
  for (std::size_t j = 0; j < m.cols(); ++j) col_nnz[j] = m.ColNonzeros(j);
  const auto row_order = SparseFirstOrder(m.rows(), row_nnz);
  const auto col_order = SparseFirstOrder(m.cols(), col_nnz);

  std::vector<std::size_t> rsel(k), csel(k);
  std::iota(rsel.begin(), rsel.end(), 0);
  do {
    std::vector<std::size_t> rows(k);
    for (std::size_t t = 0; t < k; ++t) rows[t] = row_order[rsel[t]];
    std::sort(rows.begin(), rows.end());
    std::iota(csel.begin(), csel.end(), 0);
    do {
      std::vector<std::size_t> cols(k);
      for (std::size_t t = 0; t < k; ++t) cols[t] = col_order[csel[t]];
      std::sort(cols.begin(), cols.end());
      ++out.minors_checked;
      MPoly d = Det(m.Submatrix(rows, cols), cofactor_limit);
      if (!d.is_zero()) {
        out.all_zero = false;
        out.witness = Minor{rows, cols, std::move(d)};
        out.zero_minors.clear();
        return out;
      }
      if (out.zero_minors.size() < record_limit) {
        out.zero_minors.emplace_back(rows, cols);
      }
    } while (NextCombination(csel, m.cols()));
  } while (NextCombination(rsel, m.rows()));
  return out;
}

}  // namespace steadydim
