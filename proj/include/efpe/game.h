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

#ifndef EFPE_GAME_H_
#define EFPE_GAME_H_

#include <array>
#include <string>
#include <vector>

#include "efpe/rational.h"

namespace efpe {

// Players are 0 and 1 throughout the library; the game file numbers them
// 1 and 2.
inline constexpr int kNumPlayers = 2;

enum class NodeKind { kDecision, kTerminal };

struct Node {
  NodeKind kind = NodeKind::kTerminal;
  int player = -1;
  int infoset = -1;
  std::vector<int> children;  // one per action, in action order
  std::array<Rational, kNumPlayers> payoffs;
  int parent = -1;
  int parent_action = -1;
};

struct InfoSet {
  std::string id;
  int player = -1;
  int local_index = -1;  // position among the owner's information sets
  std::vector<std::string> actions;
  std::vector<int> nodes;
};

// A finite two-player extensive-form game without chance moves. Nodes are
// numbered in depth-first pre-order from the root (node 0); information
// sets are numbered in order of first visit in the same traversal, so an
// information set never precedes the sets on the path leading to it.
// Immutable once built.
class Game {
 public:
  const std::array<std::string, kNumPlayers>& player_names() const {
    return player_names_;
  }
  int root() const { return 0; }
  int num_nodes() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int i) const { return nodes_.at(i); }
  const std::vector<Node>& nodes() const { return nodes_; }
  int num_infosets() const { return static_cast<int>(infosets_.size()); }
  const InfoSet& infoset(int i) const { return infosets_.at(i); }
  const std::vector<InfoSet>& infosets() const { return infosets_; }
  // Global indices of the player's information sets, in local order.
  const std::vector<int>& player_infosets(int player) const {
    return player_infosets_.at(player);
  }
  int num_leaves() const;

  friend bool operator==(const Game& a, const Game& b);

 private:
  friend class GameBuilder;

  std::array<std::string, kNumPlayers> player_names_{"1", "2"};
  std::vector<Node> nodes_;
  std::vector<InfoSet> infosets_;
  std::array<std::vector<int>, kNumPlayers> player_infosets_;
};

// Assembles a game bottom-up: children are created before their parent.
// Build() checks the structural invariants (a tree, consistent
// information sets, unique action names) and throws GameError; perfect
// recall is checked separately by ValidatePerfectRecall.
class GameBuilder {
 public:
  GameBuilder& SetPlayerNames(std::string first, std::string second);
  int Terminal(const Rational& u0, const Rational& u1);
  int Decision(int player, std::string infoset_id,
               std::vector<std::string> actions, std::vector<int> children);
  Game Build(int root) const;

 private:
  struct Pending {
    NodeKind kind = NodeKind::kTerminal;
    int player = -1;
    std::string infoset_id;
    std::vector<std::string> actions;
    std::vector<int> children;
    std::array<Rational, kNumPlayers> payoffs;
  };
  std::array<std::string, kNumPlayers> names_{"1", "2"};
  std::vector<Pending> pending_;
};

struct RecallReport {
  bool perfect_recall = true;
  std::vector<std::string> diagnostics;
};

// True iff every information set's nodes are reached by the same sequence
// of the owner's own (information set, action) choices.
RecallReport ValidatePerfectRecall(const Game& game);

// probabilities[local information set][action] for one player.
using BehavioralStrategy = std::vector<std::vector<Rational>>;
using BehavioralProfile = std::array<BehavioralStrategy, kNumPlayers>;

BehavioralStrategy UniformBehavioral(const Game& game, int player);
// Exact check: shapes match, entries in [0, 1], each set sums to exactly 1.
bool IsValidBehavioral(const Game& game, int player,
                       const BehavioralStrategy& strategy);

}  // namespace efpe

#endif  // EFPE_GAME_H_
