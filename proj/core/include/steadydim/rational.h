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

#ifndef STEADYDIM_RATIONAL_H_
#define STEADYDIM_RATIONAL_H_

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace steadydim {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator. Arithmetic results of mpq_class are canonical; values built
/// from text go through ParseRational, which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

/// "p/q" for non-integers, "p" for integers.
std::string ToString(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational ParseRational(std::string_view text);

/// Comma-separated list of rationals, e.g. "1,1/2,3".
RationalVector ParseRationalList(std::string_view text);

/// "(a, b, c)".
std::string ToString(std::span<const Rational> v);

/// Scales v by the lcm of its denominators (result has integer entries).
RationalVector ClearDenominators(std::span<const Rational> v);

/// Integer vector with content 1 proportional to v (same sign). Zero vectors
/// are returned unchanged.
RationalVector PrimitiveIntegerVector(std::span<const Rational> v);

}  // namespace steadydim

#endif  // STEADYDIM_RATIONAL_H_
