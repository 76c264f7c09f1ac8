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

#ifndef EFPE_VERIFY_H_
#define EFPE_VERIFY_H_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "efpe/game.h"
#include "efpe/rational.h"
#include "efpe/sequence_form.h"

namespace efpe {

// Expected utilities of the agent form under a behavioral profile.
struct AgentFormView {
  std::vector<Rational> reach;  // per node
  std::vector<std::array<Rational, kNumPlayers>> value;  // per node
  // action_utility[h][a]: the owner's expected payoff when the agent at
  // global information set h plays a and everyone else follows the profile.
  std::vector<std::vector<Rational>> action_utility;
  std::array<Rational, kNumPlayers> total;
};

AgentFormView ComputeAgentForm(const Game& game, const BehavioralProfile& profile);

struct Violation {
  int infoset = -1;  // global index; -1 for whole-strategy violations
  int action = -1;
  std::string message;
};

struct CheckReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string Summary() const;
};

// Every probability is at least ε, and at every information set each action
// played with probability above ε attains the best agent-form utility.
CheckReport CheckPerturbedEquilibrium(const Game& game, const BehavioralProfile& profile,
                                      const Rational& epsilon);

// Unperturbed Nash check: the agent-form condition with floors 0, plus a
// comparison of each player's payoff with a best response computed over the
// whole sequence tree. The second part catches profitable deviations that
// pass through information sets reached with probability zero.
CheckReport CheckNash(const Game& game, const BehavioralProfile& profile);

// max over realization plans r of rᵀ U_player r_other (player 0) or
// r_otherᵀ U_player r (player 1).
Rational BestResponseValue(const SequenceForm& sf, int player,
                           const RealizationPlan& other);

// The affine link between agent-form and sequence-form utilities at one
// information set h of player i with parent sequence q, for a profile whose
// realization plans are strictly positive:
//   EU_AF(a) = alpha * EU_SF(a) + beta,  alpha = r_i(q).
struct AffineTerms {
  Rational alpha;
  Rational beta;
  std::vector<Rational> agent_form;     // per action, from the tree
  std::vector<Rational> sequence_form;  // per action, from U_i and the plans
};

AffineTerms ComputeAffineTerms(const Game& game, const SequenceForm& sf,
                               const BehavioralProfile& profile, int infoset);
bool CheckAffineRelation(const Game& game, const SequenceForm& sf,
                         const BehavioralProfile& profile, int infoset);

// All profiles on the grid {k * grid} with every probability >= ε that pass
// CheckPerturbedEquilibrium. Throws UnsupportedError when the grid holds
// more than `max_profiles` profiles.
std::vector<BehavioralProfile> BruteForcePerturbedNe(const Game& game,
                                                     const Rational& epsilon,
                                                     const Rational& grid,
                                                     std::size_t max_profiles = 2000000);

}  // namespace efpe

#endif  // EFPE_VERIFY_H_
