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

#include "support/random_games.h"

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace efpe::testing {
namespace {

struct Proto {
  bool terminal = true;
  int player = -1;
  int infoset = -1;
  std::vector<std::unique_ptr<Proto>> children;
  Rational u0, u1;
};

using History = std::vector<std::pair<int, int>>;

class Generator {
 public:
  Generator(const RandomGameConfig& config, std::mt19937_64& rng)
      : config_(config), rng_(rng) {}

  std::unique_ptr<Proto> Build(int depth, const std::array<History, kNumPlayers>& history) {
    auto node = std::make_unique<Proto>();
    const bool leaf =
        depth >= config_.max_depth || (depth > 0 && Chance() < config_.terminal_prob);
    if (leaf) {
      leaves_.push_back(node.get());
      return node;
    }
    const int player = static_cast<int>(rng_() % kNumPlayers);
    const int actions =
        2 + static_cast<int>(rng_() % static_cast<unsigned>(config_.max_actions - 1));
    const auto key = std::make_tuple(player, history[player], actions);
    int infoset = -1;
    if (!config_.perfect_information && Chance() < config_.join_prob) {
      auto it = pool_.find(key);
      if (it != pool_.end()) {
        const std::vector<int>& sets = it->second;
        infoset = sets[rng_() % sets.size()];
      }
    }
    if (infoset < 0) {
      infoset = static_cast<int>(actions_.size());
      actions_.push_back(actions);
      owner_.push_back(player);
      pool_[key].push_back(infoset);
    }
    node->terminal = false;
    node->player = player;
    node->infoset = infoset;
    for (int a = 0; a < actions; ++a) {
      std::array<History, kNumPlayers> next = history;
      next[player].emplace_back(infoset, a);
      node->children.push_back(Build(depth + 1, next));
    }
    return node;
  }

  void AssignPayoffs() {
    const int range = config_.payoff_range;
    if (config_.perfect_information) {
      // Distinct values per player make every comparison strict.
      const int n = static_cast<int>(leaves_.size());
      const int span = std::max(range, n);
      std::vector<int> a(2 * span + 1), b(2 * span + 1);
      std::iota(a.begin(), a.end(), -span);
      std::iota(b.begin(), b.end(), -span);
      std::shuffle(a.begin(), a.end(), rng_);
      std::shuffle(b.begin(), b.end(), rng_);
      for (int i = 0; i < n; ++i) {
        leaves_[i]->u0 = a[i];
        leaves_[i]->u1 = config_.zero_sum ? -a[i] : b[i];
      }
      return;
    }
    std::uniform_int_distribution<int> draw(-range, range);
    for (Proto* leaf : leaves_) {
      leaf->u0 = draw(rng_);
      leaf->u1 = config_.zero_sum ? Rational(-leaf->u0) : Rational(draw(rng_));
    }
  }

  int Emit(const Proto& node, GameBuilder* builder) const {
    if (node.terminal) return builder->Terminal(node.u0, node.u1);
    std::vector<int> children;
    for (const auto& child : node.children) children.push_back(Emit(*child, builder));
    std::vector<std::string> names;
    for (int a = 0; a < static_cast<int>(children.size()); ++a) {
      names.push_back("a" + std::to_string(a));
    }
    return builder->Decision(node.player,
                             std::to_string(node.player + 1) + "." + std::to_string(node.infoset),
                             std::move(names), std::move(children));
  }

  // Sequences and information sets per player.
  std::array<int, kNumPlayers> SequenceCounts() const {
    std::array<int, kNumPlayers> out{1, 1};
    for (int h = 0; h < static_cast<int>(actions_.size()); ++h) out[owner_[h]] += actions_[h];
    return out;
  }
  std::array<int, kNumPlayers> InfosetCounts() const {
    std::array<int, kNumPlayers> out{0, 0};
    for (int owner : owner_) ++out[owner];
    return out;
  }

 private:
  double Chance() { return std::uniform_real_distribution<double>(0, 1)(rng_); }

  const RandomGameConfig& config_;
  std::mt19937_64& rng_;
  std::map<std::tuple<int, History, int>, std::vector<int>> pool_;
  std::vector<int> actions_;
  std::vector<int> owner_;
  std::vector<Proto*> leaves_;
};

}  // namespace

Game RandomGame(const RandomGameConfig& config, std::mt19937_64& rng) {
  while (true) {
    Generator gen(config, rng);
    std::unique_ptr<Proto> root = gen.Build(0, {});
    const auto seqs = gen.SequenceCounts();
    const auto sets = gen.InfosetCounts();
    if (seqs[0] > config.max_sequences || seqs[1] > config.max_sequences ||
        sets[0] > config.max_infosets || sets[1] > config.max_infosets) {
      continue;
    }
    gen.AssignPayoffs();
    GameBuilder builder;
    const int top = gen.Emit(*root, &builder);
    return builder.Build(top);
  }
}

std::string FixturePath(const std::string& name) {
  return std::string(EFPE_DATA_DIR) + "/games/" + name;
}

}  // namespace efpe::testing
