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

#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "efpe/game_io.h"
#include "efpe/lcp.h"
#include "efpe/lemke.h"
#include "efpe/rational.h"
#include "efpe/sequence_form.h"
#include "support/random_games.h"

namespace efpe {
namespace {

RationalMatrix Mat(int n, std::initializer_list<long> entries) {
  RationalMatrix m(n, n);
  int k = 0;
  for (long v : entries) {
    m(k / n, k % n) = v;
    ++k;
  }
  return m;
}

std::vector<Rational> Vec(std::initializer_list<long> entries) {
  return std::vector<Rational>(entries.begin(), entries.end());
}

// Gauss-Jordan over Q; nullopt when singular.
std::optional<std::vector<Rational>> GaussSolve(RationalMatrix a, std::vector<Rational> b) {
  const int n = a.rows();
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return std::nullopt;
    for (int j = 0; j < n; ++j) std::swap(a(c, j), a(p, j));
    std::swap(b[c], b[p]);
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c) == 0) continue;
      Rational f = a(r, c) / a(c, c);
      for (int j = 0; j < n; ++j) a(r, j) -= f * a(c, j);
      b[r] -= f * b[c];
    }
  }
  for (int i = 0; i < n; ++i) b[i] /= a(i, i);
  return b;
}

// Enumerates all 2^n complementary supports.
bool BruteForceHasSolution(const NumericLcp& lcp) {
  const int n = lcp.size();
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) s.push_back(i);
    std::vector<Rational> z(n);
    if (!s.empty()) {
      const int k = static_cast<int>(s.size());
      RationalMatrix a(k, k);
      std::vector<Rational> rhs(k);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) a(i, j) = lcp.M(s[i], s[j]);
        rhs[i] = -lcp.b[s[i]];
      }
      auto x = GaussSolve(a, rhs);
      if (!x) continue;
      for (int i = 0; i < k; ++i) z[s[i]] = (*x)[i];
    }
    std::vector<Rational> w = MatVec(lcp.M, z);
    for (int i = 0; i < n; ++i) w[i] += lcp.b[i];
    if (IsLcpSolution(lcp, z, w)) return true;
  }
  return false;
}

TEST(LcpVariableTest, NamesAndComplements) {
  EXPECT_EQ(LcpVariable::W(3).ToString(), "w3");
  EXPECT_EQ(LcpVariable::Z(5).ToString(), "z5");
  EXPECT_EQ(LcpVariable::Z0().ToString(), "z*");
  EXPECT_EQ(LcpVariable::W(2).Complement(), LcpVariable::Z(2));
  EXPECT_EQ(LcpVariable::Z(2).Complement(), LcpVariable::W(2));
}

TEST(LemkeTest, NonNegativeRhsNeedsNoPivots) {
  NumericLcp lcp = MakeNumericLcp(Mat(2, {1, 2, 3, 4}), Vec({0, 5}));
  LemkeResult r = LemkeSolve(lcp);
  EXPECT_EQ(r.status, LemkeStatus::kSolved);
  EXPECT_EQ(r.pivots, 0);
  EXPECT_EQ(r.z, Vec({0, 0}));
  EXPECT_EQ(r.w, Vec({0, 5}));
  EXPECT_TRUE(r.basis.IsComplementary());
}

// w1 = -z2 - 1 is negative for every z >= 0, so there is nothing to find.
TEST(LemkeTest, InfeasibleSkewToyEndsOnRay) {
  NumericLcp lcp = MakeNumericLcp(Mat(2, {0, -1, 1, 0}), Vec({-1, 1}));
  EXPECT_FALSE(BruteForceHasSolution(lcp));
  EXPECT_EQ(LemkeSolve(lcp).status, LemkeStatus::kRay);
}

TEST(LemkeTest, FeasibleSkewToy) {
  NumericLcp lcp = MakeNumericLcp(Mat(2, {0, 1, -1, 0}), Vec({-1, 1}));
  EXPECT_TRUE(BruteForceHasSolution(lcp));
  LemkeResult r = LemkeSolve(lcp);
  ASSERT_EQ(r.status, LemkeStatus::kSolved);
  EXPECT_TRUE(IsLcpSolution(lcp, r.z, r.w));
  EXPECT_EQ(r.z, Vec({1, 1}));
  EXPECT_EQ(r.w, Vec({0, 0}));
}

// Positive semidefinite plus skew matrices make every feasible LCP solvable
// by Lemke; the brute-force oracle decides feasibility.
TEST(LemkeTest, RandomMonotoneLcpsAgreeWithEnumeration) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> draw(-4, 4);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    RationalMatrix a(n, n), s(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = draw(rng);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        s(i, j) = draw(rng);
        s(j, i) = -s(i, j);
      }
    RationalMatrix m = a.Transposed() * a + s;
    std::vector<Rational> b(n);
    for (Rational& v : b) v = draw(rng);
    NumericLcp lcp = MakeNumericLcp(m, b);
    const bool feasible = BruteForceHasSolution(lcp);
    LemkeResult r = LemkeSolve(lcp);
    if (r.status == LemkeStatus::kSolved) {
      EXPECT_TRUE(IsLcpSolution(lcp, r.z, r.w));
      EXPECT_TRUE(r.basis.IsComplementary());
      std::vector<Rational> z, w;
      ASSERT_TRUE(BasicSolution(lcp, r.basis, &z, &w));
      EXPECT_EQ(z, r.z);
      EXPECT_EQ(w, r.w);
    } else {
      EXPECT_EQ(r.status, LemkeStatus::kRay);
      EXPECT_FALSE(feasible) << "trial " << trial;
    }
  }
}

TEST(LemkeTest, TraceHasOneLinePerPivot) {
  NumericLcp lcp = MakeNumericLcp(Mat(2, {0, 1, -1, 0}), Vec({-1, 1}));
  std::ostringstream trace;
  LemkeOptions options;
  options.trace = &trace;
  LemkeResult r = LemkeSolve(lcp, options);
  std::istringstream lines(trace.str());
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(line.rfind("pivot " + std::to_string(count + 1) + ": enter ", 0), 0u) << line;
    EXPECT_NE(line.find(" leave "), std::string::npos);
    EXPECT_NE(line.find(" ratio "), std::string::npos);
    ++count;
  }
  EXPECT_EQ(count, r.pivots);
}

TEST(LemkeTest, PivotBudget) {
  Game g = LoadGame(testing::FixturePath("fig1.json"));
  LcpInstance lcp = BuildLcp(BuildSequenceForm(g));
  LemkeOptions options;
  options.max_pivots = 1;
  EXPECT_EQ(LemkeSolve(AtEpsilon(lcp, Rational(1, 8)), options).status,
            LemkeStatus::kBudgetExceeded);
}

TEST(LemkeTest, Deterministic) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 10; ++i) {
    SequenceForm sf = BuildSequenceForm(testing::RandomGame({}, rng));
    NumericLcp lcp = AtEpsilon(BuildLcp(sf), Rational(1, 16));
    LemkeResult a = LemkeSolve(lcp), b = LemkeSolve(lcp);
    EXPECT_EQ(a.basis.ToString(), b.basis.ToString());
    EXPECT_EQ(a.z, b.z);
    EXPECT_EQ(a.pivots, b.pivots);
  }
}

TEST(BasisTest, Complementarity) {
  Basis b{{LcpVariable::W(0), LcpVariable::Z(1)}};
  EXPECT_TRUE(b.IsComplementary());
  EXPECT_TRUE(b.Contains(LcpVariable::Z(1)));
  EXPECT_FALSE(b.Contains(LcpVariable::Z(0)));
  Basis c{{LcpVariable::W(0), LcpVariable::Z(0)}};
  EXPECT_FALSE(c.IsComplementary());
  Basis d{{LcpVariable::W(0), LcpVariable::Z0()}};
  EXPECT_FALSE(d.IsComplementary());
}

}  // namespace
}  // namespace efpe
