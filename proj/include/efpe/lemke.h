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

#ifndef EFPE_LEMKE_H_
#define EFPE_LEMKE_H_

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "efpe/matrix.h"
#include "efpe/rational.h"

namespace efpe {

struct LcpVariable {
  enum Kind { kW, kZ, kZ0 };
  Kind kind = kW;
  int index = 0;  // ignored for kZ0

  static LcpVariable W(int i) { return {kW, i}; }
  static LcpVariable Z(int i) { return {kZ, i}; }
  static LcpVariable Z0() { return {kZ0, 0}; }

  LcpVariable Complement() const;
  std::string ToString() const;
  friend bool operator==(const LcpVariable& a, const LcpVariable& b) {
    return a.kind == b.kind && (a.kind == kZ0 || a.index == b.index);
  }
};

// Basic variables, one per tableau row.
struct Basis {
  std::vector<LcpVariable> variables;

  int size() const { return static_cast<int>(variables.size()); }
  // No z0 and never both z_i and w_i.
  bool IsComplementary() const;
  bool Contains(const LcpVariable& v) const;
  std::string ToString() const;
};

// Find z, w >= 0 with w = M z + b and zᵀw = 0. `d` is the covering vector.
struct NumericLcp {
  RationalMatrix M;
  std::vector<Rational> b;
  std::vector<Rational> d;

  int size() const { return M.rows(); }
};

// d = (1, ..., 1).
NumericLcp MakeNumericLcp(RationalMatrix m, std::vector<Rational> b);

enum class LemkeStatus { kSolved, kRay, kBudgetExceeded };

struct LemkeOptions {
  std::int64_t max_pivots = std::int64_t{1} << 20;
  std::ostream* trace = nullptr;  // one line per pivot when set
};

struct LemkeResult {
  LemkeStatus status = LemkeStatus::kSolved;
  Basis basis;
  std::vector<Rational> z;
  std::vector<Rational> w;
  Rational z0;
  std::int64_t pivots = 0;
};

// Complementary pivoting with lexicographic ratio tests. z0 enters first at
// the most negative component of b; afterwards the complement of the
// leaving variable enters. Deterministic.
LemkeResult LemkeSolve(const NumericLcp& lcp, const LemkeOptions& options = {});

// Exact check of zᵀw = 0, w = M z + b and z, w >= 0.
bool IsLcpSolution(const NumericLcp& lcp, const std::vector<Rational>& z,
                   const std::vector<Rational>& w);

// Reads the basic solution of a complementary basis directly from M and b.
// Returns false if the basis matrix is singular.
bool BasicSolution(const NumericLcp& lcp, const Basis& basis,
                   std::vector<Rational>* z, std::vector<Rational>* w);

}  // namespace efpe

#endif  // EFPE_LEMKE_H_
