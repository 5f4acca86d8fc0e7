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

#include "steadydim/rational.h"

#include <stdexcept>

namespace steadydim {

std::string ToString(const Rational& q) { return q.get_str(); }

Rational ParseRational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  std::size_t slash = s.find('/');
  auto all_digits = [&](std::size_t from, std::size_t to) {
    if (from >= to) return false;
    for (std::size_t i = from; i < to; ++i) {
      if (s[i] < '0' || s[i] > '9') return false;
    }
    return true;
  };
  bool ok = slash == std::string::npos
                ? all_digits(start, s.size())
                : all_digits(start, slash) && all_digits(slash + 1, s.size());
  if (!ok) throw std::invalid_argument("malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (slash == std::string::npos) {
    q = Rational(Integer(s));
  } else {
    std::size_t sl = s.find('/');
    Integer den(s.substr(sl + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    q = Rational(Integer(s.substr(0, sl)), den);
    q.canonicalize();
  }
  return q;
}

RationalVector ParseRationalList(std::string_view text) {
  RationalVector out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view item = text.substr(
        pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    out.push_back(ParseRational(item));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::string ToString(std::span<const Rational> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += ToString(v[i]);
  }
  return out + ")";
}

RationalVector ClearDenominators(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  RationalVector out;
  out.reserve(v.size());
  for (const auto& q : v) out.emplace_back(q * l);
  return out;
}

RationalVector PrimitiveIntegerVector(std::span<const Rational> v) {
  RationalVector out = ClearDenominators(v);
  Integer g = 0;
  for (const auto& q : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
  if (g == 0 || g == 1) return out;
  for (auto& q : out) q /= g;
  return out;
}

}  // namespace steadydim
