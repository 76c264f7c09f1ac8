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

#include <algorithm>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "efpe/errors.h"
#include "efpe/game_io.h"
#include "efpe/sequence_form.h"
#include "efpe/verify.h"
#include "support/random_games.h"

namespace efpe {
namespace {

using testing::FixturePath;

// Global information set ids of the sample game: 1.1 = 0, 1.2 = 1, 2.1 = 2.
BehavioralProfile SampleProfile(const Rational& top, const Rational& eps) {
  return {BehavioralStrategy{{top, eps}, {top, eps}}, BehavioralStrategy{{top, eps}}};
}

int GlobalId(const Game& game, const std::string& id) {
  for (int h = 0; h < game.num_infosets(); ++h)
    if (game.infoset(h).id == id) return h;
  return -1;
}

BehavioralStrategy RandomInterior(const Game& game, int player, std::mt19937_64& rng) {
  BehavioralStrategy out;
  for (int h : game.player_infosets(player)) {
    std::vector<Rational> w(game.infoset(h).actions.size());
    Rational total;
    for (Rational& x : w) {
      x = static_cast<long>(1 + rng() % 7);
      total += x;
    }
    for (Rational& x : w) x /= total;
    out.push_back(w);
  }
  return out;
}

TEST(PerturbedCheckTest, SampleGameEquilibrium) {
  Game g = LoadGame(FixturePath("fig1.json"));
  const Rational eps(1, 10);
  EXPECT_TRUE(CheckPerturbedEquilibrium(g, SampleProfile(1 - eps, eps), eps).ok());
}

TEST(PerturbedCheckTest, SwappedRootActionFails) {
  Game g = LoadGame(FixturePath("fig1.json"));
  const Rational eps(1, 10);
  BehavioralProfile p = SampleProfile(1 - eps, eps);
  std::swap(p[0][0][0], p[0][0][1]);
  CheckReport report = CheckPerturbedEquilibrium(g, p, eps);
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violations.front().infoset, GlobalId(g, "1.1"));
  AgentFormView view = ComputeAgentForm(g, p);
  EXPECT_EQ(view.action_utility[0][0], 1);
  EXPECT_EQ(view.action_utility[0][1], 1 - eps * eps);
}

TEST(PerturbedCheckTest, FloorViolation) {
  Game g = LoadGame(FixturePath("fig1.json"));
  EXPECT_FALSE(
      CheckPerturbedEquilibrium(g, SampleProfile(1, Rational(0)), Rational(1, 10)).ok());
}

TEST(PerturbedCheckTest, MatchingPenniesUniform) {
  Game g = LoadGame(FixturePath("matching_pennies.json"));
  BehavioralProfile p = {UniformBehavioral(g, 0), UniformBehavioral(g, 1)};
  for (const Rational& eps : {Rational(1, 10), Rational(1, 3), Rational(1, 2)}) {
    EXPECT_TRUE(CheckPerturbedEquilibrium(g, p, eps).ok());
  }
}

TEST(NashCheckTest, SampleGame) {
  Game g = LoadGame(FixturePath("fig1.json"));
  BehavioralProfile efpe = SampleProfile(Rational(1), Rational(0));
  EXPECT_TRUE(CheckNash(g, efpe).ok());
  // L1 against r1 is also a Nash equilibrium.
  BehavioralProfile other = {BehavioralStrategy{{1, 0}, {0, 1}}, BehavioralStrategy{{0, 1}}};
  EXPECT_TRUE(CheckNash(g, other).ok());
  BehavioralProfile bad = {BehavioralStrategy{{0, 1}, {0, 1}}, BehavioralStrategy{{0, 1}}};
  EXPECT_FALSE(CheckNash(g, bad).ok());
}

// Player 1 moves at 1.1 then at the unreached-if-pure set 1.2; the deviation
// that pays goes through both sets at once.
TEST(NashCheckTest, JointDeviationThroughUnreachedSet) {
  GameBuilder b;
  int a = b.Terminal(1, 0);
  int bb = b.Terminal(0, 0), c = b.Terminal(5, 0);
  int inner = b.Decision(0, "1.2", {"x", "y"}, {bb, c});
  Game g = b.Build(b.Decision(0, "1.1", {"L", "R"}, {a, inner}));
  BehavioralProfile p = {BehavioralStrategy{{1, 0}, {1, 0}}, BehavioralStrategy{}};
  // Each agent alone has no profitable deviation under this profile except
  // 1.2's, which is unreached; the sequence-form best response sees 5 > 1.
  EXPECT_FALSE(CheckNash(g, p).ok());
  SequenceForm sf = BuildSequenceForm(g);
  EXPECT_EQ(BestResponseValue(sf, 0, {Rational(1)}), 5);
}

TEST(BestResponseTest, SampleGame) {
  SequenceForm sf = BuildSequenceForm(LoadGame(FixturePath("fig1.json")));
  EXPECT_EQ(BestResponseValue(sf, 0, {1, 0, 1}), 1);
  EXPECT_EQ(BestResponseValue(sf, 1, {1, 0, 1, 0, 1}), 1);
  EXPECT_EQ(BestResponseValue(sf, 1, {1, 1, 0, 0, 0}), 1);
}

TEST(AffineTest, RootInformationSet) {
  Game g = LoadGame(FixturePath("fig1.json"));
  SequenceForm sf = BuildSequenceForm(g);
  const Rational third(1, 3);
  BehavioralProfile p = SampleProfile(1 - third, third);
  AffineTerms t = ComputeAffineTerms(g, sf, p, GlobalId(g, "1.1"));
  EXPECT_EQ(t.alpha, 1);
  EXPECT_EQ(t.beta, 0);
  EXPECT_TRUE(CheckAffineRelation(g, sf, p, GlobalId(g, "1.1")));
}

TEST(AffineTest, SecondSetScalesByReach) {
  Game g = LoadGame(FixturePath("fig1.json"));
  SequenceForm sf = BuildSequenceForm(g);
  BehavioralProfile p = {BehavioralStrategy{{Rational(2, 5), Rational(3, 5)},
                                            {Rational(1, 4), Rational(3, 4)}},
                         BehavioralStrategy{{Rational(1, 6), Rational(5, 6)}}};
  const int h = GlobalId(g, "1.2");
  AffineTerms t = ComputeAffineTerms(g, sf, p, h);
  EXPECT_EQ(t.alpha, Rational(3, 5));
  for (std::size_t a = 0; a < t.agent_form.size(); ++a) {
    EXPECT_EQ(t.agent_form[a], t.alpha * t.sequence_form[a] + t.beta);
  }
  // Direct expansion: EU(L2) = 2/5 + 3/5, EU(R2) = 2/5 + 3/5 * 1/6.
  EXPECT_EQ(t.agent_form[0], 1);
  EXPECT_EQ(t.agent_form[1], Rational(2, 5) + Rational(3, 5) * Rational(1, 6));
}

TEST(AffineTest, RandomInteriorProfiles) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 30; ++i) {
    Game g = testing::RandomGame({}, rng);
    SequenceForm sf = BuildSequenceForm(g);
    BehavioralProfile p = {RandomInterior(g, 0, rng), RandomInterior(g, 1, rng)};
    for (int h = 0; h < g.num_infosets(); ++h) {
      EXPECT_TRUE(CheckAffineRelation(g, sf, p, h)) << "game " << i << " set " << h;
    }
  }
}

TEST(BruteForceTest, SampleGameHasOneGridEquilibrium) {
  Game g = LoadGame(FixturePath("fig1.json"));
  const Rational eps(1, 10);
  std::vector<BehavioralProfile> found = BruteForcePerturbedNe(g, eps, eps);
  ASSERT_EQ(found.size(), 1u);
  EXPECT_EQ(found[0], SampleProfile(1 - eps, eps));
}

TEST(BruteForceTest, MatchingPenniesContainsUniform) {
  Game g = LoadGame(FixturePath("matching_pennies.json"));
  const Rational eps(1, 10);
  BehavioralProfile uniform = {UniformBehavioral(g, 0), UniformBehavioral(g, 1)};
  std::vector<BehavioralProfile> found = BruteForcePerturbedNe(g, eps, eps);
  EXPECT_NE(std::find(found.begin(), found.end(), uniform), found.end());
}

TEST(BruteForceTest, CounterexampleGamePlaysR1) {
  Game g = LoadGame(FixturePath("fig2.json"));
  const Rational eps(1, 10);
  std::vector<BehavioralProfile> found = BruteForcePerturbedNe(g, eps, eps);
  ASSERT_FALSE(found.empty());
  const int root = g.infoset(0).local_index;
  for (const BehavioralProfile& p : found) EXPECT_EQ(p[0][root][1], 1 - eps);
}

TEST(BruteForceTest, SizeGuard) {
  Game g = LoadGame(FixturePath("fig2.json"));
  EXPECT_THROW(BruteForcePerturbedNe(g, Rational(1, 10), Rational(1, 10), 1000),
               UnsupportedError);
}

}  // namespace
}  // namespace efpe
