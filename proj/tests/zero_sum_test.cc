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
#include <vector>

#include <gtest/gtest.h>

#include "efpe/errors.h"
#include "efpe/game_io.h"
#include "efpe/limit.h"
#include "efpe/sequence_form.h"
#include "efpe/simplex.h"
#include "efpe/verify.h"
#include "efpe/zero_sum.h"
#include "support/random_games.h"

namespace efpe {
namespace {

using testing::FixturePath;

std::vector<Rational> Vec(std::initializer_list<long> v) {
  return std::vector<Rational>(v.begin(), v.end());
}

// Player 1 picks T or B; player 2 picks l or r without seeing it. T is
// strictly dominant for player 1 and r for player 2.
Game DominantGame() {
  GameBuilder b;
  int tl = b.Terminal(3, -3), tr = b.Terminal(2, -2);
  int bl = b.Terminal(1, -1), br = b.Terminal(0, 0);
  int x = b.Decision(1, "2.1", {"l", "r"}, {tl, tr});
  int y = b.Decision(1, "2.1", {"l", "r"}, {bl, br});
  return b.Build(b.Decision(0, "1.1", {"T", "B"}, {x, y}));
}

TEST(SimplexTest, SmallProgram) {
  // max x + y s.t. x + 2y + s1 = 4, 3x + y + s2 = 6.
  LinearProgram lp;
  lp.A = RationalMatrix(2, 4);
  lp.A(0, 0) = 1; lp.A(0, 1) = 2; lp.A(0, 2) = 1;
  lp.A(1, 0) = 3; lp.A(1, 1) = 1; lp.A(1, 3) = 1;
  lp.b = Vec({4, 6});
  lp.c = Vec({1, 1, 0, 0});
  LpSolution s = SolveLp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.objective, Rational(14, 5));
  EXPECT_EQ(s.x[0], Rational(8, 5));
  EXPECT_EQ(s.x[1], Rational(6, 5));
}

TEST(SimplexTest, InfeasibleAndUnbounded) {
  LinearProgram infeasible;
  infeasible.A = RationalMatrix(2, 1);
  infeasible.A(0, 0) = 1;
  infeasible.A(1, 0) = 1;
  infeasible.b = Vec({1, 2});
  infeasible.c = Vec({0});
  EXPECT_EQ(SolveLp(infeasible).status, LpStatus::kInfeasible);

  LinearProgram unbounded;
  unbounded.A = RationalMatrix(1, 2);
  unbounded.A(0, 0) = 1;
  unbounded.A(0, 1) = -1;
  unbounded.b = Vec({1});
  unbounded.c = Vec({1, 0});
  EXPECT_EQ(SolveLp(unbounded).status, LpStatus::kUnbounded);
}

TEST(SimplexTest, RedundantRowsAreDropped) {
  LinearProgram lp;
  lp.A = RationalMatrix(2, 2);
  lp.A(0, 0) = 1; lp.A(0, 1) = 1;
  lp.A(1, 0) = 2; lp.A(1, 1) = 2;
  lp.b = Vec({1, 2});
  lp.c = Vec({1, 2});
  LpSolution s = SolveLp(lp);
  ASSERT_EQ(s.status, LpStatus::kOptimal);
  EXPECT_EQ(s.objective, 2);
  EXPECT_EQ(s.dropped_rows.size(), 1u);
}

TEST(ZeroSumCheckTest, Classification) {
  EXPECT_TRUE(IsZeroSum(BuildSequenceForm(LoadGame(FixturePath("matching_pennies.json")))));
  ZeroSumCheck fig1 = CheckZeroSum(BuildSequenceForm(LoadGame(FixturePath("fig1.json"))));
  EXPECT_FALSE(fig1.zero_sum);
  EXPECT_GE(fig1.q0, 0);
  EXPECT_FALSE(fig1.witness.empty());
  std::mt19937_64 rng(41);
  testing::RandomGameConfig config;
  config.payoff_range = 50;
  ZeroSumCheck random = CheckZeroSum(BuildSequenceForm(testing::RandomGame(config, rng)));
  EXPECT_FALSE(random.zero_sum);
  EXPECT_FALSE(random.witness.empty());
}

TEST(ZeroSumSolveTest, MatchingPennies) {
  SequenceForm sf = BuildSequenceForm(LoadGame(FixturePath("matching_pennies.json")));
  ZeroSumSolution s = SolveZeroSum(sf, Rational(1, 10));
  EXPECT_EQ(s.value, 0);
  const std::vector<Rational> uniform = {1, Rational(1, 2), Rational(1, 2)};
  EXPECT_EQ(s.plans[0], uniform);
  EXPECT_EQ(s.plans[1], uniform);
}

TEST(ZeroSumSolveTest, DominatedActionGetsTheFloor) {
  Game g = DominantGame();
  SequenceForm sf = BuildSequenceForm(g);
  const Rational eps(1, 10);
  ZeroSumSolution s = SolveZeroSum(sf, eps);
  EXPECT_EQ(s.plans[0], (std::vector<Rational>{1, 1 - eps, eps}));
  EXPECT_EQ(s.plans[1], (std::vector<Rational>{1, eps, 1 - eps}));
  EXPECT_EQ(s.value, ExpectedUtilities(sf, s.plans[0], s.plans[1])[0]);
}

TEST(ZeroSumSolveTest, GeneralSumIsRejected) {
  SequenceForm sf = BuildSequenceForm(LoadGame(FixturePath("fig1.json")));
  EXPECT_THROW(SolveZeroSum(sf, Rational(1, 10)), SolverError);
}

TEST(ZeroSumSolveTest, PlansSatisfyThePerturbedFloors) {
  std::mt19937_64 rng(43);
  testing::RandomGameConfig config;
  config.zero_sum = true;
  const Rational eps(1, 10);
  for (int i = 0; i < 15; ++i) {
    Game g = testing::RandomGame(config, rng);
    SequenceForm sf = BuildSequenceForm(g);
    ZeroSumSolution s = SolveZeroSum(sf, eps);
    BehavioralProfile profile;
    for (int p = 0; p < kNumPlayers; ++p) {
      EXPECT_TRUE(IsRealizationPlan(sf, p, s.plans[p]));
      for (int q = 1; q < sf.players[p].size(); ++q) {
        EXPECT_GE(s.plans[p][q], eps * s.plans[p][sf.players[p].sequences[q].parent]);
      }
      profile[p] = RealizationToBehavioral(sf, p, s.plans[p]);
    }
    EXPECT_TRUE(CheckPerturbedEquilibrium(g, profile, eps).ok());
  }
}

// The value is unique, and zero-sum equilibria are interchangeable: mixing
// one player's LP strategy with the other's LCP strategy must still be an
// equilibrium of the perturbed game.
TEST(ZeroSumSolveTest, AgreesWithTheLcpPath) {
  std::mt19937_64 rng(47);
  testing::RandomGameConfig config;
  config.zero_sum = true;
  const Rational eps(1, 10);
  SolveOptions lcp_options;
  lcp_options.path = PathChoice::kLcp;
  for (int i = 0; i < 15; ++i) {
    Game g = testing::RandomGame(config, rng);
    SequenceForm sf = BuildSequenceForm(g);
    ZeroSumSolution lp = SolveZeroSum(sf, eps);
    EquilibriumResult lcp = SolvePerturbed(g, eps, lcp_options);
    EXPECT_EQ(lp.value, lcp.utilities[0]);
    for (int p = 0; p < kNumPlayers; ++p) {
      BehavioralProfile mixed = lcp.behavioral;
      mixed[p] = RealizationToBehavioral(sf, p, lp.plans[p]);
      EXPECT_TRUE(CheckPerturbedEquilibrium(g, mixed, eps).ok());
    }
  }
}

TEST(LpCertificateTest, OptimalBasisCertifies) {
  Game g = DominantGame();
  SequenceForm sf = BuildSequenceForm(g);
  const Rational eps(1, 100);
  ZeroSumSolution s = SolveZeroSum(sf, eps);
  for (int p = 0; p < kNumPlayers; ++p) {
    LpCertificate cert = CertifyLpBasis(s.programs[p], s.solutions[p].basis);
    EXPECT_TRUE(cert.optimal);
    EXPECT_TRUE(cert.CertifiedOn(eps));
    EXPECT_EQ(cert.Values(s.programs[p].num_columns(), eps), s.solutions[p].x);
  }
}

TEST(LpCertificateTest, ProgramAtEpsilonMatchesPolynomialForm) {
  SequenceForm sf = BuildSequenceForm(LoadGame(FixturePath("matching_pennies.json")));
  PerturbedLp lp = BuildPerturbedLp(sf, 0);
  EXPECT_EQ(lp.num_columns(), lp.A.cols());
  LinearProgram at = lp.AtEpsilon(Rational(1, 4));
  EXPECT_EQ(at.A.rows(), lp.A.rows());
  EXPECT_EQ(at.b, lp.b);
}

}  // namespace
}  // namespace efpe
