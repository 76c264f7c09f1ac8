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

#include "efpe/sequence_form.h"

#include <stdexcept>

#include "efpe/errors.h"

namespace efpe {

SequenceForm BuildSequenceForm(const Game& game) {
  RecallReport recall = ValidatePerfectRecall(game);
  if (!recall.perfect_recall) {
    throw GameError("sequence form needs perfect recall: " + recall.diagnostics.front());
  }
  SequenceForm sf;
  for (int p = 0; p < kNumPlayers; ++p) {
    PlayerSequences& ps = sf.players[p];
    ps.sequences.push_back(Sequence{});
    const int sets = static_cast<int>(game.player_infosets(p).size());
    ps.infoset_parent.assign(sets, -1);
    ps.infoset_first_child.assign(sets, -1);
  }

  // Nodes are in pre-order, so a parent is always handled before its
  // children and the first node of each information set before anything
  // below it.
  std::vector<std::array<int, kNumPlayers>> own(game.num_nodes(), {0, 0});
  for (int i = 0; i < game.num_nodes(); ++i) {
    const Node& node = game.node(i);
    if (node.parent >= 0) {
      const Node& parent = game.node(node.parent);
      own[i] = own[node.parent];
      const InfoSet& h = game.infoset(parent.infoset);
      own[i][parent.player] =
          sf.players[parent.player].infoset_first_child[h.local_index] + node.parent_action;
    }
    if (node.kind != NodeKind::kDecision) continue;
    const InfoSet& h = game.infoset(node.infoset);
    PlayerSequences& ps = sf.players[node.player];
    if (ps.infoset_first_child[h.local_index] >= 0) continue;
    const int parent_seq = own[i][node.player];
    ps.infoset_parent[h.local_index] = parent_seq;
    ps.infoset_first_child[h.local_index] = ps.size();
    for (int a = 0; a < static_cast<int>(h.actions.size()); ++a) {
      Sequence s;
      s.parent = parent_seq;
      s.infoset = node.infoset;
      s.local_infoset = h.local_index;
      s.action = a;
      s.length = ps.sequences[parent_seq].length + 1;
      ps.sequences.push_back(s);
    }
  }

  for (PlayerSequences& ps : sf.players) {
    const int rows = ps.num_infosets() + 1;
    ps.constraints = RationalMatrix(rows, ps.size());
    ps.constraint_rhs.assign(rows, Rational(0));
    ps.constraints(0, 0) = 1;
    ps.constraint_rhs[0] = 1;
    for (int k = 0; k < ps.num_infosets(); ++k) {
      ps.constraints(k + 1, ps.infoset_parent[k]) = 1;
    }
    for (int q = 1; q < ps.size(); ++q) {
      ps.constraints(ps.sequences[q].local_infoset + 1, q) = -1;
    }
  }

  const int n0 = sf.players[0].size();
  const int n1 = sf.players[1].size();
  sf.payoff = {RationalMatrix(n0, n1), RationalMatrix(n0, n1)};
  sf.terminal = Matrix<int>(n0, n1, 0);
  for (int i = 0; i < game.num_nodes(); ++i) {
    const Node& node = game.node(i);
    if (node.kind != NodeKind::kTerminal) continue;
    const int q0 = own[i][0];
    const int q1 = own[i][1];
    sf.payoff[0](q0, q1) += node.payoffs[0];
    sf.payoff[1](q0, q1) += node.payoffs[1];
    sf.terminal(q0, q1) = 1;
  }
  return sf;
}

std::vector<std::string> SequenceActions(const Game& game,
                                         const PlayerSequences& seqs, int q) {
  std::vector<std::string> out;
  for (int s = q; s > 0; s = seqs.sequences[s].parent) {
    const Sequence& seq = seqs.sequences[s];
    out.push_back(game.infoset(seq.infoset).actions[seq.action]);
  }
  return {out.rbegin(), out.rend()};
}

BehavioralStrategy RealizationToBehavioral(const SequenceForm& sf, int player,
                                           const RealizationPlan& plan) {
  const PlayerSequences& ps = sf.players[player];
  if (static_cast<int>(plan.size()) != ps.size()) {
    throw std::invalid_argument("realization plan has the wrong length");
  }
  BehavioralStrategy out(ps.num_infosets());
  for (int k = 0; k < ps.num_infosets(); ++k) {
    const int first = ps.infoset_first_child[k];
    int count = 0;
    while (first + count < ps.size() && ps.sequences[first + count].local_infoset == k &&
           ps.sequences[first + count].action == count) {
      ++count;
    }
    const Rational& parent = plan[ps.infoset_parent[k]];
    out[k].reserve(count);
    for (int a = 0; a < count; ++a) {
      out[k].push_back(parent > 0 ? Rational(plan[first + a] / parent)
                                  : Rational(Rational(1) / count));
    }
  }
  return out;
}

RealizationPlan BehavioralToRealization(const SequenceForm& sf, int player,
                                        const BehavioralStrategy& strategy) {
  const PlayerSequences& ps = sf.players[player];
  if (static_cast<int>(strategy.size()) != ps.num_infosets()) {
    throw std::invalid_argument("behavioral strategy has the wrong shape");
  }
  RealizationPlan plan(ps.size());
  plan[0] = 1;
  for (int q = 1; q < ps.size(); ++q) {
    const Sequence& s = ps.sequences[q];
    plan[q] = plan[s.parent] * strategy.at(s.local_infoset).at(s.action);
  }
  return plan;
}

bool IsRealizationPlan(const SequenceForm& sf, int player, const RealizationPlan& plan) {
  const PlayerSequences& ps = sf.players[player];
  if (static_cast<int>(plan.size()) != ps.size()) return false;
  for (const Rational& v : plan) {
    if (v < 0) return false;
  }
  return MatVec(ps.constraints, plan) == ps.constraint_rhs;
}

std::array<Rational, kNumPlayers> ExpectedUtilities(const SequenceForm& sf,
                                                    const RealizationPlan& r0,
                                                    const RealizationPlan& r1) {
  std::array<Rational, kNumPlayers> out{Rational(0), Rational(0)};
  for (int p = 0; p < kNumPlayers; ++p) {
    const RationalMatrix& u = sf.payoff[p];
    if (static_cast<int>(r0.size()) != u.rows() || static_cast<int>(r1.size()) != u.cols()) {
      throw std::invalid_argument("realization plan length mismatch");
    }
    for (int i = 0; i < u.rows(); ++i) {
      if (r0[i] == 0) continue;
      for (int j = 0; j < u.cols(); ++j) {
        if (u(i, j) == 0 || r1[j] == 0) continue;
        out[p] += r0[i] * u(i, j) * r1[j];
      }
    }
  }
  return out;
}

}  // namespace efpe
