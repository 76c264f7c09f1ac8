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

#ifndef EFPE_LIMIT_H_
#define EFPE_LIMIT_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "efpe/eps_poly.h"
#include "efpe/game.h"
#include "efpe/lcp.h"
#include "efpe/rational.h"
#include "efpe/result.h"
#include "efpe/sequence_form.h"
#include "efpe/verify.h"

namespace efpe {

enum class PathChoice { kAuto, kLcp, kLp };

struct SolveOptions {
  std::int64_t max_pivots = std::int64_t{1} << 20;
  std::size_t eps_bits_cap = 1000000;
  // Replaces ε* for limit solves; the basis is still certified, and the
  // result is labeled with epsilon_source "override".
  std::optional<Rational> epsilon;
  // kAuto takes the LP route for zero-sum games; kLp requires one.
  PathChoice path = PathChoice::kAuto;
  std::ostream* trace = nullptr;
  bool self_verify = true;
};

// A player's perturbed plan in transformed coordinates, r̃_q = num[q] / den.
struct TransformedPlan {
  std::vector<EpsPoly> numerators;
  EpsPoly denominator;
};

// Limits as ε → 0 of r(ε) = R(ε)⁻¹ r̃(ε) and of the behavioral ratios
// r(qa) / r(q), including at sets whose limit reach is zero.
struct PlanLimit {
  RealizationPlan realization;
  BehavioralStrategy behavioral;
};
PlanLimit LimitOfPlan(const SequenceForm& sf, int player, const PolyMatrix& r_inverse,
                      const TransformedPlan& plan);

// The r̃ blocks of an LCP certificate.
std::array<TransformedPlan, kNumPlayers> TransformedPlans(const LcpInstance& lcp,
                                                          const OptimalityCertificate& cert);

// Limit strategies of an LCP basis. The certificate must be non-negative
// near zero. Fills realization, behavioral, basis, offset and utilities.
EquilibriumResult ExtractLimit(const SequenceForm& sf, const LcpInstance& lcp,
                               const Basis& basis);

EquilibriumResult SolveEfpe(const Game& game, const SolveOptions& options = {});
// Requires 0 < ε <= 1/ν.
EquilibriumResult SolvePerturbed(const Game& game, const Rational& epsilon,
                                 const SolveOptions& options = {});
// ε = 0: the plain sequence-form LCP.
EquilibriumResult SolveNash(const Game& game, const SolveOptions& options = {});

// Checks a result against its game:
//   all kinds: valid strategies and plans that agree with them;
//   ne: CheckNash;
//   perturbed-ne: CheckPerturbedEquilibrium at its ε;
//   efpe-limit: CheckNash, then, when the result carries a basis, replays
//   its certificate (non-negative on (0, ε], perturbed equilibrium at ε and
//   ε/2, limit equal to the reported strategies). Without a basis, the
//   profile mixed with a uniform tremble (1 - |ρ(h)|δ) π + δ must be a
//   perturbed equilibrium at δ and δ/2, with δ = ε if given, else 1/(10ν).
CheckReport VerifyResult(const Game& game, const EquilibriumResult& result);

}  // namespace efpe

#endif  // EFPE_LIMIT_H_
