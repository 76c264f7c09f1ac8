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

#include "efpe/perturbation.h"

#include <algorithm>
#include <stdexcept>

#include "efpe/errors.h"

namespace efpe {

PolyMatrix BuildPerturbationMatrix(const PlayerSequences& seqs) {
  const int n = seqs.size();
  PolyMatrix r = PolyMatrix::Identity(n);
  for (int q = 1; q < n; ++q) {
    r(q, seqs.sequences[q].parent) = -EpsPoly::Epsilon();
  }
  return r;
}

PolyMatrix BuildPerturbationMatrix(const PlayerSequences& seqs,
                                   const std::vector<EpsPoly>& floors) {
  if (static_cast<int>(floors.size()) != seqs.size()) {
    throw std::invalid_argument("one lower bound per sequence is required");
  }
  for (int q = 1; q < seqs.size(); ++q) {
    if (!(floors[q] == EpsPoly::Epsilon())) {
      throw UnsupportedError("non-uniform per-action lower bounds are not supported");
    }
  }
  return BuildPerturbationMatrix(seqs);
}

PolyMatrix InvertPerturbationMatrix(const PlayerSequences& seqs) {
  const int n = seqs.size();
  PolyMatrix inv(n, n);
  const EpsPoly eps = EpsPoly::Epsilon();
  for (int q = 0; q < n; ++q) {
    const int parent = seqs.sequences[q].parent;
    if (parent >= 0) {
      for (int c = 0; c <= parent; ++c) {
        if (!inv(parent, c).is_zero()) inv(q, c) = eps * inv(parent, c);
      }
    }
    inv(q, q) = EpsPoly(1);
  }
  return inv;
}

int MaxBranching(const Game& game) {
  int nu = 0;
  for (const InfoSet& h : game.infosets()) {
    nu = std::max(nu, static_cast<int>(h.actions.size()));
  }
  return nu;
}

RealizationPlan UniformFeasiblePlan(const SequenceForm& sf, int player) {
  const PlayerSequences& ps = sf.players[player];
  std::vector<int> branching(ps.num_infosets(), 0);
  for (int q = 1; q < ps.size(); ++q) ++branching[ps.sequences[q].local_infoset];
  RealizationPlan plan(ps.size());
  plan[0] = 1;
  for (int q = 1; q < ps.size(); ++q) {
    const Sequence& s = ps.sequences[q];
    plan[q] = plan[s.parent] / branching[s.local_infoset];
  }
  return plan;
}

}  // namespace efpe
