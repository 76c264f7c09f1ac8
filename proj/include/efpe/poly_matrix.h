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

#ifndef EFPE_POLY_MATRIX_H_
#define EFPE_POLY_MATRIX_H_

#include <vector>

#include "efpe/eps_poly.h"
#include "efpe/matrix.h"
#include "efpe/rational.h"

namespace efpe {

PolyMatrix ToPolyMatrix(const RationalMatrix& m);
RationalMatrix Evaluate(const PolyMatrix& m, const Rational& x);
std::vector<Rational> Evaluate(const std::vector<EpsPoly>& v, const Rational& x);

// Largest degree over all entries; -1 when every entry is zero.
int MaxDegree(const PolyMatrix& m);
bool IsLowerTriangular(const PolyMatrix& m);

// Determinant by fraction-free (Bareiss) elimination over Q[ε]. Every
// division is exact; integer inputs keep integer intermediates.
EpsPoly Determinant(const PolyMatrix& m);

// Solution of B(ε) x = b(ε) as polynomial fractions sharing the
// denominator ±det B(ε); each entry is returned Reduced(). Throws
// SolverError when B is identically singular.
std::vector<PolyFraction> Solve(const PolyMatrix& b_matrix,
                                const std::vector<EpsPoly>& rhs);

// Same system, returning unreduced Cramer numerators over one shared
// denominator: x_i = numerators[i] / denominator.
struct CommonDenominatorSolution {
  std::vector<EpsPoly> numerators;
  EpsPoly denominator;
};
CommonDenominatorSolution SolveCommon(const PolyMatrix& b_matrix,
                                      const std::vector<EpsPoly>& rhs);

}  // namespace efpe

#endif  // EFPE_POLY_MATRIX_H_
