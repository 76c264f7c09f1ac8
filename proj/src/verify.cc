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

#include "efpe/verify.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "efpe/errors.h"

namespace efpe {
namespace {

Rational Utility(const SequenceForm& sf, int player, int own, int other) {
  return player == 0 ? sf.payoff[0](own, other) : sf.payoff[1](other, own);
}

std::string ActionLabel(const Game& game, int infoset, int action) {
  const InfoSet& h = game.infoset(infoset);
  return "information set " + h.id + ", action " + h.actions[action];
}

void CheckAgents(const Game& game, const BehavioralProfile& profile, const Rational& floor,
                 CheckReport* report) {
  const AgentFormView view = ComputeAgentForm(game, profile);
  for (int g = 0; g < game.num_infosets(); ++g) {
    const InfoSet& h = game.infoset(g);
    const std::vector<Rational>& pi = profile[h.player][h.local_index];
    const std::vector<Rational>& eu = view.action_utility[g];
    const Rational best = *std::max_element(eu.begin(), eu.end());
    for (int a = 0; a < static_cast<int>(pi.size()); ++a) {
      if (pi[a] < floor) {
        report->violations.push_back(
            {g, a, ActionLabel(game, g, a) + ": probability " + ToString(pi[a]) +
                       " is below the floor " + ToString(floor)});
      } else if (pi[a] > floor && eu[a] < best) {
        report->violations.push_back(
            {g, a, ActionLabel(game, g, a) + ": probability " + ToString(pi[a]) +
                       " but utility " + ToString(eu[a]) + " < best " + ToString(best)});
      }
    }
  }
}

void CheckProfileShape(const Game& game, const BehavioralProfile& profile) {
  for (int p = 0; p < kNumPlayers; ++p) {
    if (!IsValidBehavioral(game, p, profile[p])) {
      throw std::invalid_argument("invalid behavioral strategy for player " +
                                  std::to_string(p + 1));
    }
  }
}

}  // namespace

std::string CheckReport::Summary() const {
  if (ok()) return "ok";
  std::string out;
  for (const Violation& v : violations) {
    if (!out.empty()) out += '\n';
    out += v.message;
  }
  return out;
}

AgentFormView ComputeAgentForm(const Game& game, const BehavioralProfile& profile) {
  CheckProfileShape(game, profile);
  const int n = game.num_nodes();
  AgentFormView view;
  view.reach.assign(n, Rational(0));
  view.value.assign(n, {Rational(0), Rational(0)});
  view.reach[0] = 1;
  auto prob = [&](const Node& node, int a) -> const Rational& {
    return profile[node.player][game.infoset(node.infoset).local_index][a];
  };
  for (int i = 0; i < n; ++i) {
    const Node& node = game.node(i);
    for (int a = 0; a < static_cast<int>(node.children.size()); ++a) {
      view.reach[node.children[a]] = view.reach[i] * prob(node, a);
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    const Node& node = game.node(i);
    if (node.kind == NodeKind::kTerminal) {
      view.value[i] = node.payoffs;
      continue;
    }
    for (int a = 0; a < static_cast<int>(node.children.size()); ++a) {
      const Rational& pa = prob(node, a);
      if (pa == 0) continue;
      for (int p = 0; p < kNumPlayers; ++p) view.value[i][p] += pa * view.value[node.children[a]][p];
    }
  }
  view.total = view.value[0];
  view.action_utility.resize(game.num_infosets());
  for (int g = 0; g < game.num_infosets(); ++g) {
    const InfoSet& h = game.infoset(g);
    const int p = h.player;
    Rational base = view.total[p];
    for (int x : h.nodes) base -= view.reach[x] * view.value[x][p];
    for (int a = 0; a < static_cast<int>(h.actions.size()); ++a) {
      Rational eu = base;
      for (int x : h.nodes) {
        eu += view.reach[x] * view.value[game.node(x).children[a]][p];
      }
      view.action_utility[g].push_back(std::move(eu));
    }
  }
  return view;
}

CheckReport CheckPerturbedEquilibrium(const Game& game, const BehavioralProfile& profile,
                                      const Rational& epsilon) {
  CheckReport report;
  CheckAgents(game, profile, epsilon, &report);
  return report;
}

CheckReport CheckNash(const Game& game, const BehavioralProfile& profile) {
  CheckReport report;
  CheckAgents(game, profile, Rational(0), &report);
  const SequenceForm sf = BuildSequenceForm(game);
  const std::array<RealizationPlan, kNumPlayers> r = {
      BehavioralToRealization(sf, 0, profile[0]), BehavioralToRealization(sf, 1, profile[1])};
  const std::array<Rational, kNumPlayers> eu = ExpectedUtilities(sf, r[0], r[1]);
  for (int p = 0; p < kNumPlayers; ++p) {
    const Rational best = BestResponseValue(sf, p, r[1 - p]);
    if (best > eu[p]) {
      report.violations.push_back({-1, -1, "player " + game.player_names()[p] +
                                               " gains by deviating: best response " +
                                               ToString(best) + " > " + ToString(eu[p])});
    }
  }
  return report;
}

Rational BestResponseValue(const SequenceForm& sf, int player, const RealizationPlan& other) {
  const PlayerSequences& ps = sf.players[player];
  const int n = ps.size();
  const int m = sf.players[1 - player].size();
  if (static_cast<int>(other.size()) != m) {
    throw std::invalid_argument("opponent plan has the wrong length");
  }
  std::vector<Rational> value(n);
  for (int q = 0; q < n; ++q) {
    for (int o = 0; o < m; ++o) {
      if (other[o] != 0) value[q] += Utility(sf, player, q, o) * other[o];
    }
  }
  std::vector<std::vector<int>> sets_after(n);
  for (int k = 0; k < ps.num_infosets(); ++k) sets_after[ps.infoset_parent[k]].push_back(k);
  for (int q = n - 1; q >= 0; --q) {
    for (int k : sets_after[q]) {
      const int first = ps.infoset_first_child[k];
      Rational best = value[first];
      for (int c = first + 1; c < n && ps.sequences[c].local_infoset == k; ++c) {
        best = std::max(best, value[c]);
      }
      value[q] += best;
    }
  }
  return value[0];
}

AffineTerms ComputeAffineTerms(const Game& game, const SequenceForm& sf,
                               const BehavioralProfile& profile, int infoset) {
  const InfoSet& h = game.infoset(infoset);
  const int i = h.player;
  const PlayerSequences& ps = sf.players[i];
  const int first = ps.infoset_first_child[h.local_index];
  const int num_actions = static_cast<int>(h.actions.size());
  const RealizationPlan own = BehavioralToRealization(sf, i, profile[i]);
  const RealizationPlan other = BehavioralToRealization(sf, 1 - i, profile[1 - i]);
  for (int a = 0; a < num_actions; ++a) {
    if (own[first + a] == 0) {
      throw std::invalid_argument("affine relation needs a strictly positive plan");
    }
  }
  // extends[q] = the action of h that q passes through, or -1.
  std::vector<int> extends(ps.size(), -1);
  for (int q = 1; q < ps.size(); ++q) {
    if (q >= first && q < first + num_actions) {
      extends[q] = q - first;
    } else {
      extends[q] = extends[ps.sequences[q].parent];
    }
  }
  AffineTerms t;
  t.alpha = own[ps.infoset_parent[h.local_index]];
  t.sequence_form.assign(num_actions, Rational(0));
  for (int q = 0; q < ps.size(); ++q) {
    Rational against;
    for (int o = 0; o < static_cast<int>(other.size()); ++o) {
      if (other[o] != 0) against += Utility(sf, i, q, o) * other[o];
    }
    if (against == 0) continue;
    if (extends[q] < 0) {
      t.beta += against * own[q];
    } else {
      t.sequence_form[extends[q]] += against * own[q] / own[first + extends[q]];
    }
  }
  t.agent_form = ComputeAgentForm(game, profile).action_utility[infoset];
  return t;
}

bool CheckAffineRelation(const Game& game, const SequenceForm& sf,
                         const BehavioralProfile& profile, int infoset) {
  const AffineTerms t = ComputeAffineTerms(game, sf, profile, infoset);
  for (int a = 0; a < static_cast<int>(t.agent_form.size()); ++a) {
    if (t.agent_form[a] != t.alpha * t.sequence_form[a] + t.beta) return false;
  }
  return true;
}

namespace {

// Compositions of `total` into `parts` entries, each at least `min`.
void Compositions(int total, int parts, int min, std::vector<int>* current,
                  std::vector<std::vector<int>>* out) {
  if (parts == 1) {
    if (total >= min) {
      current->push_back(total);
      out->push_back(*current);
      current->pop_back();
    }
    return;
  }
  for (int v = min; v <= total - min * (parts - 1); ++v) {
    current->push_back(v);
    Compositions(total - v, parts - 1, min, current, out);
    current->pop_back();
  }
}

}  // namespace

std::vector<BehavioralProfile> BruteForcePerturbedNe(const Game& game,
                                                     const Rational& epsilon,
                                                     const Rational& grid,
                                                     std::size_t max_profiles) {
  if (grid <= 0) throw std::invalid_argument("grid step must be positive");
  const Rational steps = 1 / grid;
  if (steps.get_den() != 1 || steps.get_num() > 1000) {
    throw std::invalid_argument("grid step must be 1/k for a small integer k");
  }
  const int total = static_cast<int>(steps.get_num().get_si());
  Rational min_units = epsilon / grid;
  Integer min_ceil;
  mpz_cdiv_q(min_ceil.get_mpz_t(), min_units.get_num_mpz_t(), min_units.get_den_mpz_t());
  const int min = static_cast<int>(std::max<long>(0, min_ceil.get_si()));

  std::vector<std::vector<std::vector<Rational>>> choices(game.num_infosets());
  std::size_t count = 1;
  for (int g = 0; g < game.num_infosets(); ++g) {
    std::vector<std::vector<int>> parts;
    std::vector<int> current;
    Compositions(total, static_cast<int>(game.infoset(g).actions.size()), min, &current,
                 &parts);
    for (const std::vector<int>& p : parts) {
      std::vector<Rational> dist;
      for (int units : p) dist.push_back(grid * units);
      choices[g].push_back(std::move(dist));
    }
    if (choices[g].empty()) return {};
    if (count > max_profiles / choices[g].size()) {
      throw UnsupportedError("grid holds more than " + std::to_string(max_profiles) +
                             " profiles");
    }
    count *= choices[g].size();
  }

  BehavioralProfile profile;
  for (int p = 0; p < kNumPlayers; ++p) {
    profile[p].resize(game.player_infosets(p).size());
  }
  std::vector<BehavioralProfile> found;
  std::vector<std::size_t> digit(game.num_infosets(), 0);
  for (std::size_t step = 0; step < count; ++step) {
    for (int g = 0; g < game.num_infosets(); ++g) {
      const InfoSet& h = game.infoset(g);
      profile[h.player][h.local_index] = choices[g][digit[g]];
    }
    if (CheckPerturbedEquilibrium(game, profile, epsilon).ok()) found.push_back(profile);
    for (int g = 0; g < game.num_infosets(); ++g) {
      if (++digit[g] < choices[g].size()) break;
      digit[g] = 0;
    }
  }
  return found;
}

}  // namespace efpe
