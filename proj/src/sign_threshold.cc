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

#include "efpe/sign_threshold.h"

#include <algorithm>
#include <stdexcept>

namespace efpe {

SignThreshold PolySignThreshold(const EpsPoly& p) {
  const Rational a0 = p.constant_term();
  if (a0 == 0) {
    throw std::invalid_argument("PolySignThreshold: constant term is zero");
  }
  const Rational abs_a0 = abs(a0);
  Rational eps = abs_a0 / (p.MaxAbsCoefficient() + abs_a0);
  return SignThreshold{Sign(a0), eps};
}

SignThreshold RationalSignThreshold(const EpsPoly& num, const EpsPoly& den) {
  if (num.constant_term() == 0 || den.constant_term() == 0) {
    throw std::invalid_argument("RationalSignThreshold: zero constant term");
  }
  SignThreshold n = PolySignThreshold(num);
  SignThreshold d = PolySignThreshold(den);
  return SignThreshold{n.sign * d.sign, std::min(n.epsilon, d.epsilon)};
}

SignThreshold IntegerRationalSign(const EpsPoly& num, const EpsPoly& den) {
  if (den.is_zero()) {
    throw std::invalid_argument("IntegerRationalSign: zero denominator");
  }
  if (!num.HasIntegerCoefficients() || !den.HasIntegerCoefficients()) {
    throw std::invalid_argument("IntegerRationalSign: non-integer coefficients");
  }
  const Rational mu = std::max(num.MaxAbsCoefficient(), den.MaxAbsCoefficient());
  const Rational eps = 1 / (2 * mu);
  if (num.is_zero()) return SignThreshold{0, eps};
  const Rational lead_num = num.coeff(num.order());
  const Rational lead_den = den.coeff(den.order());
  return SignThreshold{Sign(lead_num) * Sign(lead_den), eps};
}

}  // namespace efpe
