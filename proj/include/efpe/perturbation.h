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

#ifndef EFPE_PERTURBATION_H_
#define EFPE_PERTURBATION_H_

#include <vector>

#include "efpe/eps_poly.h"
#include "efpe/game.h"
#include "efpe/matrix.h"
#include "efpe/sequence_form.h"

namespace efpe {

// R(ε): unit lower-triangular, with -ε at (qa, q) for every sequence qa
// extending q. Perturbed plans r(ε) = R(ε)⁻¹ r̃ are exactly those whose
// behavioral probabilities are all at least ε.
PolyMatrix BuildPerturbationMatrix(const PlayerSequences& seqs);

// Per-action lower bounds are only supported when they all equal ε; any
// other vector throws UnsupportedError. `floors` is indexed by sequence
// (entry 0 ignored) and holds polynomials in ε.
PolyMatrix BuildPerturbationMatrix(const PlayerSequences& seqs,
                                   const std::vector<EpsPoly>& floors);

// R(ε)⁻¹, computed row by row: row(qa) = e_qa + ε row(q).
PolyMatrix InvertPerturbationMatrix(const PlayerSequences& seqs);

// Largest number of actions at any information set, 0 if none.
int MaxBranching(const Game& game);

// y(q_∅) = 1 and y(qa) = y(q) / |ρ(h)|. R(ε) y >= 0 for 0 <= ε <= 1/ν, where
// ν is the largest branching factor.
RealizationPlan UniformFeasiblePlan(const SequenceForm& sf, int player);

}  // namespace efpe

#endif  // EFPE_PERTURBATION_H_
