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

#ifndef EFPE_SIGN_THRESHOLD_H_
#define EFPE_SIGN_THRESHOLD_H_

#include "efpe/eps_poly.h"
#include "efpe/rational.h"

namespace efpe {

// A sign in {-1, 0, +1} that a polynomial or rational function keeps on an
// interval starting at zero and ending at `epsilon`.
struct SignThreshold {
  int sign = 0;
  Rational epsilon;
};

// For p with a₀ ≠ 0: sign(a₀) holds on [0, ε*] with
// ε* = |a₀| / (μ + |a₀|), μ = max_i |a_i|. Throws std::invalid_argument if
// a₀ = 0.
SignThreshold PolySignThreshold(const EpsPoly& p);

// num/den with nonzero constant terms: sign(a₀/b₀) on [0, ε*], ε* the
// smaller of the two polynomial thresholds.
SignThreshold RationalSignThreshold(const EpsPoly& num, const EpsPoly& den);

// num/den with integer coefficients and den ≢ 0. Leading powers of ε are
// factored out of both; the sign is constant on (0, ε*] with
// ε* = 1/(2μ), μ = max(μ_num, μ_den). A zero numerator gives sign 0.
SignThreshold IntegerRationalSign(const EpsPoly& num, const EpsPoly& den);

}  // namespace efpe

#endif  // EFPE_SIGN_THRESHOLD_H_
