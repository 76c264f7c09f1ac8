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

#include "efpe/game.h"

#include <map>
#include <set>
#include <utility>

#include "efpe/errors.h"

namespace efpe {

int Game::num_leaves() const {
  int n = 0;
  for (const Node& node : nodes_) n += node.kind == NodeKind::kTerminal;
  return n;
}

bool operator==(const Game& a, const Game& b) {
  if (a.player_names_ != b.player_names_ || a.nodes_.size() != b.nodes_.size() ||
      a.infosets_.size() != b.infosets_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.nodes_.size(); ++i) {
    const Node& x = a.nodes_[i];
    const Node& y = b.nodes_[i];
    if (x.kind != y.kind || x.player != y.player || x.infoset != y.infoset ||
        x.children != y.children || x.parent != y.parent) {
      return false;
    }
    if (x.kind == NodeKind::kTerminal && x.payoffs != y.payoffs) return false;
  }
  for (std::size_t i = 0; i < a.infosets_.size(); ++i) {
    const InfoSet& x = a.infosets_[i];
    const InfoSet& y = b.infosets_[i];
    if (x.id != y.id || x.player != y.player || x.actions != y.actions ||
        x.nodes != y.nodes) {
      return false;
    }
  }
  return true;
}

GameBuilder& GameBuilder::SetPlayerNames(std::string first, std::string second) {
  names_ = {std::move(first), std::move(second)};
  return *this;
}

int GameBuilder::Terminal(const Rational& u0, const Rational& u1) {
  Pending p;
  p.kind = NodeKind::kTerminal;
  p.payoffs = {u0, u1};
  pending_.push_back(std::move(p));
  return static_cast<int>(pending_.size()) - 1;
}

int GameBuilder::Decision(int player, std::string infoset_id,
                          std::vector<std::string> actions,
                          std::vector<int> children) {
  Pending p;
  p.kind = NodeKind::kDecision;
  p.player = player;
  p.infoset_id = std::move(infoset_id);
  p.actions = std::move(actions);
  p.children = std::move(children);
  pending_.push_back(std::move(p));
  return static_cast<int>(pending_.size()) - 1;
}

Game GameBuilder::Build(int root) const {
  const int n = static_cast<int>(pending_.size());
  if (root < 0 || root >= n) throw GameError("root node does not exist");

  std::vector<int> parent_count(n, 0);
  for (int i = 0; i < n; ++i) {
    const Pending& p = pending_[i];
    if (p.kind != NodeKind::kDecision) continue;
    if (p.player < 0 || p.player >= kNumPlayers) {
      throw GameError("decision node in information set '" + p.infoset_id +
                      "' has an invalid player");
    }
    if (p.infoset_id.empty()) throw GameError("decision node without information set id");
    if (p.actions.empty()) {
      throw GameError("information set '" + p.infoset_id + "' has no actions");
    }
    if (p.actions.size() != p.children.size()) {
      throw GameError("information set '" + p.infoset_id +
                      "': action and child counts differ");
    }
    std::set<std::string> seen;
    for (const std::string& a : p.actions) {
      if (!seen.insert(a).second) {
        throw GameError("information set '" + p.infoset_id +
                        "' repeats action '" + a + "'");
      }
    }
    for (int c : p.children) {
      if (c < 0 || c >= n) throw GameError("child node does not exist");
      if (c == root || ++parent_count[c] > 1) {
        throw GameError("node reached twice: the game is not a tree");
      }
    }
  }

  Game game;
  game.player_names_ = names_;
  std::map<std::string, int> infoset_index;
  std::vector<int> new_index(n, -1);

  // Iterative pre-order traversal; children pushed in reverse keep action
  // order on the stack.
  struct Frame {
    int pending;
    int parent;
    int parent_action;
  };
  std::vector<Frame> stack{{root, -1, -1}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    const Pending& p = pending_[f.pending];
    const int id = static_cast<int>(game.nodes_.size());
    new_index[f.pending] = id;
    Node node;
    node.kind = p.kind;
    node.parent = f.parent;
    node.parent_action = f.parent_action;
    if (f.parent >= 0) game.nodes_[f.parent].children[f.parent_action] = id;
    if (p.kind == NodeKind::kTerminal) {
      node.payoffs = p.payoffs;
    } else {
      node.player = p.player;
      node.children.assign(p.children.size(), -1);
      auto [it, inserted] =
          infoset_index.emplace(p.infoset_id, static_cast<int>(game.infosets_.size()));
      if (inserted) {
        InfoSet h;
        h.id = p.infoset_id;
        h.player = p.player;
        h.local_index = static_cast<int>(game.player_infosets_[p.player].size());
        h.actions = p.actions;
        game.player_infosets_[p.player].push_back(it->second);
        game.infosets_.push_back(std::move(h));
      } else {
        const InfoSet& h = game.infosets_[it->second];
        if (h.player != p.player) {
          throw GameError("information set '" + h.id + "' has nodes of both players");
        }
        if (h.actions != p.actions) {
          throw GameError("information set '" + h.id +
                          "' has nodes with different action lists");
        }
      }
      node.infoset = it->second;
      game.infosets_[it->second].nodes.push_back(id);
      for (int a = static_cast<int>(p.children.size()) - 1; a >= 0; --a) {
        stack.push_back({p.children[a], id, a});
      }
    }
    game.nodes_.push_back(std::move(node));
  }
  if (static_cast<int>(game.nodes_.size()) != n) {
    throw GameError("game contains nodes unreachable from the root");
  }
  return game;
}

RecallReport ValidatePerfectRecall(const Game& game) {
  RecallReport report;
  using History = std::vector<std::pair<int, int>>;
  // Own (infoset, action) history of each node's mover, by player.
  std::vector<std::array<History, kNumPlayers>> history(game.num_nodes());
  for (int i = 0; i < game.num_nodes(); ++i) {
    const Node& node = game.node(i);
    if (node.parent < 0) continue;
    history[i] = history[node.parent];
    const Node& parent = game.node(node.parent);
    history[i][parent.player].emplace_back(parent.infoset, node.parent_action);
  }
  for (const InfoSet& h : game.infosets()) {
    const History& first = history[h.nodes.front()][h.player];
    for (std::size_t k = 1; k < h.nodes.size(); ++k) {
      if (history[h.nodes[k]][h.player] != first) {
        report.perfect_recall = false;
        report.diagnostics.push_back(
            "information set '" + h.id +
            "': nodes are reached by different own-action histories");
        break;
      }
    }
  }
  return report;
}

BehavioralStrategy UniformBehavioral(const Game& game, int player) {
  BehavioralStrategy out;
  for (int h : game.player_infosets(player)) {
    const auto k = static_cast<long>(game.infoset(h).actions.size());
    out.emplace_back(static_cast<std::size_t>(k), Rational(1) / k);
  }
  return out;
}

bool IsValidBehavioral(const Game& game, int player,
                       const BehavioralStrategy& strategy) {
  const std::vector<int>& sets = game.player_infosets(player);
  if (strategy.size() != sets.size()) return false;
  for (std::size_t k = 0; k < sets.size(); ++k) {
    const std::vector<Rational>& probs = strategy[k];
    if (probs.size() != game.infoset(sets[k]).actions.size()) return false;
    Rational total(0);
    for (const Rational& p : probs) {
      if (p < 0 || p > 1) return false;
      total += p;
    }
    if (total != 1) return false;
  }
  return true;
}

}  // namespace efpe
