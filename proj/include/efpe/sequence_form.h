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

#ifndef EFPE_SEQUENCE_FORM_H_
#define EFPE_SEQUENCE_FORM_H_

#include <array>
#include <string>
#include <vector>

#include "efpe/game.h"
#include "efpe/matrix.h"
#include "efpe/rational.h"

namespace efpe {

struct Sequence {
  int parent = -1;          // -1 for the empty sequence
  int infoset = -1;         // global index of the set where `action` is taken
  int local_infoset = -1;
  int action = -1;
  int length = 0;
};

// One player's sequences and constraints F r = f. Sequences are ordered
// parents first; the children of an information set are contiguous and in
// action order. Row 0 of F pins the empty sequence (+1, f = 1); row k + 1
// encodes local information set k as +1 on its parent sequence and -1 on
// each child, with f = 0.
struct PlayerSequences {
  std::vector<Sequence> sequences;
  std::vector<int> infoset_parent;       // by local information set
  std::vector<int> infoset_first_child;  // by local information set
  RationalMatrix constraints;            // F
  std::vector<Rational> constraint_rhs;  // f

  int size() const { return static_cast<int>(sequences.size()); }
  int num_infosets() const { return static_cast<int>(infoset_parent.size()); }
};

using RealizationPlan = std::vector<Rational>;

struct SequenceForm {
  std::array<PlayerSequences, kNumPlayers> players;
  // payoff[i](q0, q1): player i's payoff at the leaf reached by the pair,
  // zero for pairs that reach no leaf. Both are |Q0| x |Q1|.
  std::array<RationalMatrix, kNumPlayers> payoff;
  // terminal(q0, q1) is 1 when the pair reaches a leaf.
  Matrix<int> terminal;
};

// Throws GameError if the game lacks perfect recall.
SequenceForm BuildSequenceForm(const Game& game);

// Action names along the sequence, root first; empty for q_∅.
std::vector<std::string> SequenceActions(const Game& game,
                                         const PlayerSequences& seqs, int q);

// π(a) = r(qa) / r(q) where r(q) > 0; uniform over the set's actions where
// r(q) = 0.
BehavioralStrategy RealizationToBehavioral(const SequenceForm& sf, int player,
                                           const RealizationPlan& plan);

// r(q_∅) = 1 and r(qa) = r(q) π(a).
RealizationPlan BehavioralToRealization(const SequenceForm& sf, int player,
                                        const BehavioralStrategy& strategy);

// Exact F r = f and r >= 0.
bool IsRealizationPlan(const SequenceForm& sf, int player,
                       const RealizationPlan& plan);

// (r0ᵀ U0 r1, r0ᵀ U1 r1).
std::array<Rational, kNumPlayers> ExpectedUtilities(const SequenceForm& sf,
                                                    const RealizationPlan& r0,
                                                    const RealizationPlan& r1);

}  // namespace efpe

#endif  // EFPE_SEQUENCE_FORM_H_
