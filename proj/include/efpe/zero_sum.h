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

#ifndef EFPE_ZERO_SUM_H_
#define EFPE_ZERO_SUM_H_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "efpe/eps_poly.h"
#include "efpe/matrix.h"
#include "efpe/rational.h"
#include "efpe/sequence_form.h"
#include "efpe/simplex.h"

namespace efpe {

struct ZeroSumCheck {
  bool zero_sum = true;
  int q0 = -1, q1 = -1;  // first sequence pair whose payoffs do not cancel
  std::string witness;
};

// Compares the payoffs of both players at every sequence pair.
ZeroSumCheck CheckZeroSum(const SequenceForm& sf);
inline bool IsZeroSum(const SequenceForm& sf) { return CheckZeroSum(sf).zero_sum; }

// The perturbed maximin program of `maximizer` (p) against the other
// player (o), with A = R_p⁻ᵀ P R_o⁻¹ and P the maximizer's payoffs in
// (q_p, q_o) orientation:
//   max f_oᵀ (v+ - v-)
//   s.t. F_p R_p⁻¹ r̃ = f_p
//        R_o⁻ᵀ F_oᵀ (v+ - v-) - Aᵀ r̃ + s = 0
//        r̃, v+, v-, s >= 0
// Columns are ordered r̃, v+, v-, s.
struct PerturbedLp {
  PolyMatrix A;
  std::vector<Rational> b;
  std::vector<Rational> c;
  int maximizer = 0;
  int n_r = 0, n_v = 0, n_s = 0;
  PolyMatrix r_inverse;  // R_p(ε)⁻¹

  int v_plus_begin() const { return n_r; }
  int v_minus_begin() const { return n_r + n_v; }
  int s_begin() const { return n_r + 2 * n_v; }
  int num_columns() const { return n_r + 2 * n_v + n_s; }
  LinearProgram AtEpsilon(const Rational& epsilon) const;
};

PerturbedLp BuildPerturbedLp(const SequenceForm& sf, int maximizer);

// Symbolic optimality certificate of an LP basis: primal values B(ε)⁻¹ b
// per basis row and reduced costs per column (zero for basic columns),
// each with integer coefficients.
struct LpCertificate {
  std::vector<int> basis;
  // x_B = primal_numerators / denominator, before integer scaling.
  std::vector<EpsPoly> primal_numerators;
  EpsPoly denominator;
  std::vector<PolyFraction> primal;
  std::vector<PolyFraction> reduced_costs;
  std::vector<int> primal_signs;
  std::vector<int> reduced_signs;
  Rational threshold;       // signs are constant on (0, threshold]
  bool optimal = false;     // primal >= 0 and reduced costs <= 0 near zero

  // The full primal vector at ε.
  std::vector<Rational> Values(int num_columns, const Rational& epsilon) const;
  // Primal fraction of a column, zero when nonbasic.
  PolyFraction Column(int column) const;
  bool CertifiedOn(const Rational& epsilon) const {
    return optimal && epsilon > 0 && epsilon <= threshold;
  }
};

// Throws SolverError for a singular basis or dropped constraint rows.
LpCertificate CertifyLpBasis(const PerturbedLp& lp, const std::vector<int>& basis);

struct ZeroSumSolution {
  std::array<PerturbedLp, kNumPlayers> programs;
  std::array<LpSolution, kNumPlayers> solutions;
  std::array<RealizationPlan, kNumPlayers> plans;  // r(ε)
  Rational offset;
  Rational value;  // player 0's expected payoff, offset removed
  std::int64_t pivots = 0;
};

// Both players' perturbed maximin strategies at ε >= 0. Throws SolverError
// when the game is not zero-sum or a program is infeasible.
ZeroSumSolution SolveZeroSum(const SequenceForm& sf, const Rational& epsilon);

}  // namespace efpe

#endif  // EFPE_ZERO_SUM_H_
