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

#include <random>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "efpe/errors.h"
#include "efpe/game.h"
#include "efpe/game_io.h"
#include "support/random_games.h"

namespace efpe {
namespace {

using testing::FixturePath;

std::set<std::string> InfosetIds(const Game& game, int player) {
  std::set<std::string> out;
  for (int h : game.player_infosets(player)) out.insert(game.infoset(h).id);
  return out;
}

TEST(GameIoTest, SampleGameStructure) {
  Game g = LoadGame(FixturePath("fig1.json"));
  EXPECT_EQ(InfosetIds(g, 0), (std::set<std::string>{"1.1", "1.2"}));
  EXPECT_EQ(InfosetIds(g, 1), (std::set<std::string>{"2.1"}));
  ASSERT_EQ(g.num_leaves(), 4);
  int ones = 0, zeros = 0;
  for (const Node& n : g.nodes()) {
    if (n.kind != NodeKind::kTerminal) continue;
    EXPECT_EQ(n.payoffs[0], n.payoffs[1]);
    if (n.payoffs[0] == 1) ++ones;
    if (n.payoffs[0] == 0) ++zeros;
  }
  EXPECT_EQ(ones, 3);
  EXPECT_EQ(zeros, 1);
}

TEST(GameIoTest, SingleTerminalGame) {
  Game g = ParseGame(R"({"players": ["a", "b"],
                         "root": {"kind": "terminal", "payoffs": ["0", "0"]}})");
  EXPECT_EQ(g.num_nodes(), 1);
  EXPECT_EQ(g.num_infosets(), 0);
  EXPECT_EQ(g.num_leaves(), 1);
}

TEST(GameIoTest, CounterexampleGameHasOneActivePlayer) {
  Game g = LoadGame(FixturePath("fig2.json"));
  EXPECT_EQ(g.player_infosets(0).size(), 5u);
  EXPECT_TRUE(g.player_infosets(1).empty());
  EXPECT_EQ(g.num_leaves(), 6);
}

TEST(GameIoTest, DecimalAndFloatPayoffsAreExact) {
  Game g = ParseGame(R"({"players": ["a", "b"],
                         "root": {"kind": "terminal", "payoffs": ["0.1", 0.1]}})");
  EXPECT_EQ(g.node(0).payoffs[0], Rational(1, 10));
  EXPECT_EQ(g.node(0).payoffs[1], Rational(1, 10));
  Game h = ParseGame(R"({"players": ["a", "b"],
                         "root": {"kind": "terminal", "payoffs": ["-3/6", 2]}})");
  EXPECT_EQ(h.node(0).payoffs[0], Rational(-1, 2));
  EXPECT_EQ(h.node(0).payoffs[1], Rational(2));
}

TEST(GameIoTest, RoundTrip) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    Game g = testing::RandomGame({}, rng);
    EXPECT_EQ(ParseGame(SerializeGame(g)), g);
  }
  Game fig1 = LoadGame(FixturePath("fig1.json"));
  EXPECT_EQ(ParseGame(SerializeGame(fig1)), fig1);
}

TEST(GameIoTest, SyntaxErrorsCarryOffsets) {
  try {
    ParseGame(R"({"players": ["a", "b"], "root": )");
    FAIL() << "expected GameSyntaxError";
  } catch (const GameSyntaxError& e) {
    EXPECT_GT(e.offset(), 0u);
  }
}

TEST(GameIoTest, SemanticErrors) {
  EXPECT_THROW(ParseGame(R"({"players": ["a", "b"],
                             "root": {"kind": "terminal", "payoffs": ["1"]}})"),
               GameError);
  EXPECT_THROW(ParseGame(R"({"players": ["a", "b"],
                             "root": {"kind": "chance", "actions": []}})"),
               GameError);
  EXPECT_THROW(ParseGame(R"({"version": 2, "players": ["a", "b"],
                             "root": {"kind": "terminal", "payoffs": [0, 0]}})"),
               GameError);
  EXPECT_THROW(LoadGame("/nonexistent/game.json"), GameError);
}

TEST(GameBuilderTest, RejectsInconsistentInformationSets) {
  GameBuilder b;
  int t0 = b.Terminal(0, 0), t1 = b.Terminal(0, 0);
  int t2 = b.Terminal(0, 0), t3 = b.Terminal(0, 0), t4 = b.Terminal(0, 0);
  int x = b.Decision(1, "2.1", {"l", "r"}, {t0, t1});
  int y = b.Decision(1, "2.1", {"l", "m", "r"}, {t2, t3, t4});
  int root = b.Decision(0, "1.1", {"L", "R"}, {x, y});
  EXPECT_THROW(b.Build(root), GameError);
}

TEST(GameBuilderTest, RejectsDuplicateActionNames) {
  GameBuilder b;
  int t0 = b.Terminal(0, 0), t1 = b.Terminal(0, 0);
  int root = b.Decision(0, "1.1", {"a", "a"}, {t0, t1});
  EXPECT_THROW(b.Build(root), GameError);
}

TEST(PerfectRecallTest, SampleGameHasPerfectRecall) {
  EXPECT_TRUE(ValidatePerfectRecall(LoadGame(FixturePath("fig1.json"))).perfect_recall);
}

TEST(PerfectRecallTest, ForgettingOwnActionIsReported) {
  GameBuilder b;
  int t0 = b.Terminal(1, 0), t1 = b.Terminal(0, 0);
  int t2 = b.Terminal(0, 0), t3 = b.Terminal(1, 0);
  int x = b.Decision(0, "1.2", {"l", "r"}, {t0, t1});
  int y = b.Decision(0, "1.2", {"l", "r"}, {t2, t3});
  int root = b.Decision(0, "1.1", {"L", "R"}, {x, y});
  Game g = b.Build(root);
  RecallReport report = ValidatePerfectRecall(g);
  EXPECT_FALSE(report.perfect_recall);
  ASSERT_FALSE(report.diagnostics.empty());
  EXPECT_NE(report.diagnostics.front().find("1.2"), std::string::npos);
  EXPECT_THROW(ParseGame(SerializeGame(g)), GameError);
}

TEST(PerfectRecallTest, PerfectInformationGames) {
  std::mt19937_64 rng(5);
  testing::RandomGameConfig config;
  config.perfect_information = true;
  for (int i = 0; i < 20; ++i) {
    Game g = testing::RandomGame(config, rng);
    for (const InfoSet& h : g.infosets()) EXPECT_EQ(h.nodes.size(), 1u);
    EXPECT_TRUE(ValidatePerfectRecall(g).perfect_recall);
  }
}

TEST(BehavioralTest, UniformIsValid) {
  Game g = LoadGame(FixturePath("fig1.json"));
  BehavioralStrategy s = UniformBehavioral(g, 0);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[0][0], Rational(1, 2));
  EXPECT_TRUE(IsValidBehavioral(g, 0, s));
  s[0][0] = Rational(3, 4);
  EXPECT_FALSE(IsValidBehavioral(g, 0, s));
  s[0][1] = Rational(1, 4);
  EXPECT_TRUE(IsValidBehavioral(g, 0, s));
  s[0][0] = Rational(5, 4);
  s[0][1] = Rational(-1, 4);
  EXPECT_FALSE(IsValidBehavioral(g, 0, s));
}

}  // namespace
}  // namespace efpe
