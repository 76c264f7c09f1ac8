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

#ifndef EFPE_EPS_POLY_H_
#define EFPE_EPS_POLY_H_

#include <string>
#include <vector>

#include "efpe/rational.h"

namespace efpe {

// Univariate polynomial in the perturbation ε with exact rational
// coefficients, stored densely from the constant term upward. The
// coefficient vector never carries trailing zeros, so the zero polynomial
// has no coefficients and degree -1.
class EpsPoly {
 public:
  EpsPoly() = default;
  EpsPoly(const Rational& constant);  // NOLINT: constants promote freely.
  EpsPoly(long constant) : EpsPoly(Rational(constant)) {}  // NOLINT
  explicit EpsPoly(std::vector<Rational> coefficients);

  static EpsPoly Monomial(const Rational& coefficient, int degree);
  static EpsPoly Epsilon() { return Monomial(Rational(1), 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Smallest power with a nonzero coefficient; -1 for the zero polynomial.
  int order() const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  // Coefficient of ε^i; zero outside the stored range.
  Rational coeff(int i) const;
  Rational constant_term() const { return coeff(0); }

  // max_i |a_i|; zero for the zero polynomial.
  Rational MaxAbsCoefficient() const;
  bool HasIntegerCoefficients() const;
  // gcd of the (integer) coefficients, positive; zero for the zero
  // polynomial. Requires HasIntegerCoefficients().
  Integer Content() const;

  // p(ε) / ε^k. Requires order() >= k (or the zero polynomial).
  EpsPoly ShiftDown(int k) const;
  EpsPoly ShiftUp(int k) const;

  Rational Eval(const Rational& x) const;

  EpsPoly operator-() const;
  EpsPoly& operator+=(const EpsPoly& other);
  EpsPoly& operator-=(const EpsPoly& other);
  EpsPoly& operator*=(const Rational& scalar);

  friend EpsPoly operator+(EpsPoly a, const EpsPoly& b) { return a += b; }
  friend EpsPoly operator-(EpsPoly a, const EpsPoly& b) { return a -= b; }
  friend EpsPoly operator*(const EpsPoly& a, const EpsPoly& b);
  friend EpsPoly operator*(EpsPoly a, const Rational& s) { return a *= s; }
  friend EpsPoly operator*(const Rational& s, EpsPoly a) { return a *= s; }
  friend bool operator==(const EpsPoly& a, const EpsPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  // Human-readable form such as "1 - 2ε + ε^2".
  std::string ToString(const std::string& var = "ε") const;

 private:
  void Trim();

  std::vector<Rational> coeffs_;
};

// Quotient of an exact division; throws std::domain_error when `divisor`
// does not divide `dividend` or is zero.
EpsPoly DivideExact(const EpsPoly& dividend, const EpsPoly& divisor);

// num(ε) / den(ε) with den not identically zero.
struct PolyFraction {
  EpsPoly num;
  EpsPoly den = EpsPoly(1);

  // Cancels the common power of ε and, for integer coefficients, the common
  // integer content; normalizes the lowest-order denominator coefficient to
  // be positive. The value of the fraction is unchanged for ε > 0.
  PolyFraction Reduced() const;
  Rational Eval(const Rational& x) const;
  // Limit as ε → 0+. Throws SolverError if the fraction is unbounded there.
  Rational Limit() const;
};

}  // namespace efpe

#endif  // EFPE_EPS_POLY_H_
