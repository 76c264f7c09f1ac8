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

#ifndef EFPE_SIMPLEX_H_
#define EFPE_SIMPLEX_H_

#include <cstdint>
#include <vector>

#include "efpe/matrix.h"
#include "efpe/rational.h"

namespace efpe {

// maximize cᵀx subject to A x = b, x >= 0.
struct LinearProgram {
  RationalMatrix A;
  std::vector<Rational> b;
  std::vector<Rational> c;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> x;
  Rational objective;
  // basis[i] is the column basic in constraint row i. Rows found to be
  // redundant are dropped and listed in `dropped_rows`.
  std::vector<int> basis;
  std::vector<int> rows;
  std::vector<int> dropped_rows;
  std::int64_t pivots = 0;
};

// Two-phase primal simplex over exact rationals with Bland's rule. Unit
// columns of A start in the basis; the remaining rows get artificials.
LpSolution SolveLp(const LinearProgram& lp);

}  // namespace efpe

#endif  // EFPE_SIMPLEX_H_
