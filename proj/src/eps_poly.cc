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

#include "efpe/eps_poly.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "efpe/errors.h"

namespace efpe {

EpsPoly::EpsPoly(const Rational& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

EpsPoly::EpsPoly(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  Trim();
}

EpsPoly EpsPoly::Monomial(const Rational& coefficient, int degree) {
  EpsPoly out;
  if (coefficient == 0) return out;
  out.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Rational(0));
  out.coeffs_.back() = coefficient;
  return out;
}

void EpsPoly::Trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

int EpsPoly::order() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

Rational EpsPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[i];
}

Rational EpsPoly::MaxAbsCoefficient() const {
  Rational mu(0);
  for (const Rational& c : coeffs_) {
    Rational a = abs(c);
    if (a > mu) mu = a;
  }
  return mu;
}

bool EpsPoly::HasIntegerCoefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.get_den() == 1; });
}

Integer EpsPoly::Content() const {
  Integer g(0);
  for (const Rational& c : coeffs_) {
    if (c.get_den() != 1) {
      throw std::domain_error("Content() needs integer coefficients");
    }
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  }
  return g;
}

EpsPoly EpsPoly::ShiftDown(int k) const {
  if (is_zero() || k == 0) return *this;
  if (order() < k) throw std::domain_error("ShiftDown past the order");
  EpsPoly out;
  out.coeffs_.assign(coeffs_.begin() + k, coeffs_.end());
  return out;
}

EpsPoly EpsPoly::ShiftUp(int k) const {
  if (is_zero() || k == 0) return *this;
  EpsPoly out;
  out.coeffs_.assign(static_cast<std::size_t>(k), Rational(0));
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

Rational EpsPoly::Eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

EpsPoly EpsPoly::operator-() const {
  EpsPoly out = *this;
  for (Rational& c : out.coeffs_) c = -c;
  return out;
}

EpsPoly& EpsPoly::operator+=(const EpsPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), Rational(0));
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] += other.coeffs_[i];
  }
  Trim();
  return *this;
}

EpsPoly& EpsPoly::operator-=(const EpsPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(other.coeffs_.size(), Rational(0));
  }
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) {
    coeffs_[i] -= other.coeffs_[i];
  }
  Trim();
  return *this;
}

EpsPoly& EpsPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (Rational& c : coeffs_) c *= scalar;
  return *this;
}

EpsPoly operator*(const EpsPoly& a, const EpsPoly& b) {
  EpsPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  Rational term;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j] == 0) continue;
      mpq_mul(term.get_mpq_t(), a.coeffs_[i].get_mpq_t(), b.coeffs_[j].get_mpq_t());
      out.coeffs_[i + j] += term;
    }
  }
  out.Trim();
  return out;
}

std::string EpsPoly::ToString(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (i == 0 || !unit) os << efpe::ToString(mag);
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

EpsPoly DivideExact(const EpsPoly& dividend, const EpsPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  if (dividend.is_zero()) return EpsPoly();
  int dd = divisor.degree();
  int nd = dividend.degree();
  if (nd < dd) throw std::domain_error("inexact polynomial division");
  std::vector<Rational> rem = dividend.coefficients();
  std::vector<Rational> quot(static_cast<std::size_t>(nd - dd) + 1);
  const std::vector<Rational>& dc = divisor.coefficients();
  const Rational& lead = dc.back();
  Rational t;
  for (int k = nd - dd; k >= 0; --k) {
    Rational& top = rem[k + dd];
    if (top == 0) continue;
    Rational q = top / lead;
    for (int j = 0; j <= dd; ++j) {
      if (dc[j] == 0) continue;
      mpq_mul(t.get_mpq_t(), q.get_mpq_t(), dc[j].get_mpq_t());
      rem[k + j] -= t;
    }
    quot[k] = std::move(q);
  }
  for (int i = 0; i < dd; ++i) {
    if (rem[i] != 0) throw std::domain_error("inexact polynomial division");
  }
  return EpsPoly(std::move(quot));
}

PolyFraction PolyFraction::Reduced() const {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) return PolyFraction{EpsPoly(), EpsPoly(1)};
  int shift = std::min(num.order(), den.order());
  PolyFraction out{num.ShiftDown(shift), den.ShiftDown(shift)};
  if (out.num.HasIntegerCoefficients() && out.den.HasIntegerCoefficients()) {
    Integer g;
    Integer cn = out.num.Content();
    Integer cd = out.den.Content();
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (g > 1) {
      Rational inv(Integer(1), g);
      out.num *= inv;
      out.den *= inv;
    }
  }
  if (out.den.coeff(out.den.order()) < 0) {
    out.num = -out.num;
    out.den = -out.den;
  }
  return out;
}

Rational PolyFraction::Eval(const Rational& x) const {
  Rational d = den.Eval(x);
  if (d == 0) throw std::domain_error("fraction denominator vanishes");
  return num.Eval(x) / d;
}

Rational PolyFraction::Limit() const {
  if (num.is_zero()) return Rational(0);
  int dord = den.order();
  if (dord < 0) throw std::domain_error("zero denominator");
  if (num.order() < dord) {
    throw SolverError("basic solution is unbounded as epsilon -> 0");
  }
  return num.coeff(dord) / den.coeff(dord);
}

}  // namespace efpe
