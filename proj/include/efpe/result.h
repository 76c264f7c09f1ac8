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

#ifndef EFPE_RESULT_H_
#define EFPE_RESULT_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "efpe/game.h"
#include "efpe/lcp.h"
#include "efpe/lemke.h"
#include "efpe/rational.h"
#include "efpe/sequence_form.h"

namespace efpe {

enum class ResultKind { kEfpeLimit, kPerturbedNe, kNe };
enum class SolverPath { kLcp, kLp };

std::string KindName(ResultKind kind);  // "efpe-limit", "perturbed-ne", "ne"
std::string PathName(SolverPath path);  // "lcp", "lp"

struct EquilibriumResult {
  ResultKind kind = ResultKind::kEfpeLimit;
  SolverPath path = SolverPath::kLcp;
  std::array<RealizationPlan, kNumPlayers> realization;
  BehavioralProfile behavioral;
  // ε at which the pivoting ran; zero for plain Nash equilibria.
  Rational epsilon;
  // "npp" (ε* from the bound), "override" (user supplied for a limit),
  // "refined" (halved below ε* until the basis certified), "given"
  // (perturbed mode) or "zero".
  std::string epsilon_source;
  // The basis stays optimal on all of (0, epsilon].
  bool certified = false;
  std::optional<Basis> basis;                            // LCP path
  std::array<std::vector<int>, kNumPlayers> lp_bases;    // LP path
  Rational offset;
  std::array<Rational, kNumPlayers> utilities;  // original payoffs
  std::optional<NppCertificate> npp;
  std::int64_t pivots = 0;
  // LCP solution at `epsilon`; kept in memory only.
  std::vector<Rational> z, w;
};

// Deterministic JSON: probabilities and other numbers as exact fraction
// strings.
std::string ResultToJson(const Game& game, const SequenceForm& sf,
                         const EquilibriumResult& result);

// Reads a result document back against its game. Behavioral probabilities
// are required; the realization plans are recomputed from them when the
// document omits them. Throws GameSyntaxError or GameError.
EquilibriumResult ResultFromJson(const Game& game, const SequenceForm& sf,
                                 const std::string& text);

}  // namespace efpe

#endif  // EFPE_RESULT_H_
