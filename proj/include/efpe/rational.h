// Copyright 2026 The EFPE Solver Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef EFPE_RATIONAL_H_
#define EFPE_RATIONAL_H_

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>

namespace efpe {

using Integer = mpz_class;
using Rational = mpq_class;

// Parses "3", "-3/7", "0.125", "1.5e-3". Decimal literals are converted
// exactly. Throws std::invalid_argument on malformed input or a zero
// denominator.
Rational ParseRational(std::string_view text);

// Canonical "p/q" form, or "p" when the denominator is one.
std::string ToString(const Rational& value);
std::string ToString(const Integer& value);

inline int Sign(const Rational& value) { return sgn(value); }
inline int Sign(const Integer& value) { return sgn(value); }

// Number of bits of |value|; zero for zero.
std::size_t BitLength(const Integer& value);

// True when numerator and denominator share no factor and the denominator is
// positive.
bool IsCanonical(const Rational& value);

}  // namespace efpe

#endif  // EFPE_RATIONAL_H_
