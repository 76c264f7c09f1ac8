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

#include "efpe/lemke.h"

#include <stdexcept>
#include <utility>

namespace efpe {

LcpVariable LcpVariable::Complement() const {
  switch (kind) {
    case kW: return Z(index);
    case kZ: return W(index);
    case kZ0: break;
  }
  throw std::logic_error("z0 has no complement");
}

std::string LcpVariable::ToString() const {
  switch (kind) {
    case kW: return "w" + std::to_string(index);
    case kZ: return "z" + std::to_string(index);
    case kZ0: break;
  }
  return "z*";
}

bool Basis::IsComplementary() const {
  std::vector<int> seen(variables.size(), 0);
  for (const LcpVariable& v : variables) {
    if (v.kind == LcpVariable::kZ0) return false;
    if (v.index < 0 || v.index >= size() || seen[v.index]++) return false;
  }
  return true;
}

bool Basis::Contains(const LcpVariable& v) const {
  for (const LcpVariable& u : variables) {
    if (u == v) return true;
  }
  return false;
}

std::string Basis::ToString() const {
  std::string out;
  for (const LcpVariable& v : variables) {
    if (!out.empty()) out += ' ';
    out += v.ToString();
  }
  return out;
}

NumericLcp MakeNumericLcp(RationalMatrix m, std::vector<Rational> b) {
  NumericLcp lcp{std::move(m), std::move(b), {}};
  lcp.d.assign(lcp.b.size(), Rational(1));
  return lcp;
}

namespace {

void CheckShape(const NumericLcp& lcp) {
  const int n = lcp.size();
  if (!lcp.M.is_square() || static_cast<int>(lcp.b.size()) != n ||
      static_cast<int>(lcp.d.size()) != n) {
    throw std::invalid_argument("LCP dimensions disagree");
  }
  for (const Rational& v : lcp.d) {
    if (v <= 0) throw std::invalid_argument("covering vector must be positive");
  }
}

// Rows hold B⁻¹ [I, -M, -d | b]; columns are w (0..n-1), z (n..2n-1), z0
// (2n) and the right-hand side (2n+1).
class Tableau {
 public:
  explicit Tableau(const NumericLcp& lcp) : n_(lcp.size()) {
    rows_.assign(n_, std::vector<Rational>(2 * n_ + 2));
    for (int i = 0; i < n_; ++i) {
      rows_[i][i] = 1;
      for (int j = 0; j < n_; ++j) rows_[i][n_ + j] = -lcp.M(i, j);
      rows_[i][2 * n_] = -lcp.d[i];
      rows_[i][2 * n_ + 1] = lcp.b[i];
      basis_.variables.push_back(LcpVariable::W(i));
    }
  }

  int Column(const LcpVariable& v) const {
    switch (v.kind) {
      case LcpVariable::kW: return v.index;
      case LcpVariable::kZ: return n_ + v.index;
      case LcpVariable::kZ0: break;
    }
    return 2 * n_;
  }
  const Rational& Entry(int row, int col) const { return rows_[row][col]; }
  const Rational& Rhs(int row) const { return rows_[row][2 * n_ + 1]; }
  const Basis& basis() const { return basis_; }

  // -1 if the column is unbounded. Among rows with a positive entry picks
  // the lexicographic minimum of (rhs, B⁻¹ row) / entry; a row holding z0
  // wins any tie on the plain ratio.
  int RatioTest(int col) const {
    std::vector<int> best;
    Rational best_ratio;
    for (int i = 0; i < n_; ++i) {
      const Rational& a = rows_[i][col];
      if (a <= 0) continue;
      Rational ratio = Rhs(i) / a;
      if (best.empty() || ratio < best_ratio) {
        best = {i};
        best_ratio = std::move(ratio);
      } else if (ratio == best_ratio) {
        best.push_back(i);
      }
    }
    if (best.size() <= 1) return best.empty() ? -1 : best.front();
    for (int i : best) {
      if (basis_.variables[i].kind == LcpVariable::kZ0) return i;
    }
    for (int k = 0; k < n_ && best.size() > 1; ++k) {
      std::vector<int> next;
      Rational min;
      for (int i : best) {
        Rational v = rows_[i][k] / rows_[i][col];
        if (next.empty() || v < min) {
          next = {i};
          min = std::move(v);
        } else if (v == min) {
          next.push_back(i);
        }
      }
      best = std::move(next);
    }
    return best.front();
  }

  void Pivot(int row, int col, const LcpVariable& entering) {
    std::vector<Rational>& pr = rows_[row];
    const Rational inv = 1 / pr[col];
    for (Rational& v : pr) {
      if (v != 0) v *= inv;
    }
    std::vector<int> nonzero;
    for (int c = 0; c < static_cast<int>(pr.size()); ++c) {
      if (pr[c] != 0) nonzero.push_back(c);
    }
    for (int i = 0; i < n_; ++i) {
      if (i == row || rows_[i][col] == 0) continue;
      const Rational factor = rows_[i][col];
      for (int c : nonzero) rows_[i][c] -= factor * pr[c];
    }
    basis_.variables[row] = entering;
  }

 private:
  int n_;
  std::vector<std::vector<Rational>> rows_;
  Basis basis_;
};

void Extract(const Tableau& t, int n, LemkeResult* out) {
  out->basis = t.basis();
  out->z.assign(n, Rational(0));
  out->w.assign(n, Rational(0));
  out->z0 = 0;
  for (int i = 0; i < n; ++i) {
    const LcpVariable& v = t.basis().variables[i];
    switch (v.kind) {
      case LcpVariable::kW: out->w[v.index] = t.Rhs(i); break;
      case LcpVariable::kZ: out->z[v.index] = t.Rhs(i); break;
      case LcpVariable::kZ0: out->z0 = t.Rhs(i); break;
    }
  }
}

void Trace(const LemkeOptions& options, std::int64_t step, const LcpVariable& entering,
           const LcpVariable& leaving, const Rational& ratio) {
  if (options.trace == nullptr) return;
  *options.trace << "pivot " << step << ": enter " << entering.ToString() << " leave "
                 << leaving.ToString() << " ratio " << ToString(ratio) << '\n';
}

}  // namespace

LemkeResult LemkeSolve(const NumericLcp& lcp, const LemkeOptions& options) {
  CheckShape(lcp);
  const int n = lcp.size();
  Tableau t(lcp);
  LemkeResult result;

  // Most negative b_i / d_i; the last index on ties keeps the tableau
  // lexicographically positive after the first pivot.
  int row = -1;
  Rational worst(0);
  for (int i = 0; i < n; ++i) {
    Rational v = lcp.b[i] / lcp.d[i];
    if (v < 0 && (row < 0 || v <= worst)) {
      row = i;
      worst = std::move(v);
    }
  }
  if (row < 0) {
    Extract(t, n, &result);
    return result;
  }

  LcpVariable entering = LcpVariable::Z0();
  while (true) {
    if (result.pivots >= options.max_pivots) {
      result.status = LemkeStatus::kBudgetExceeded;
      Extract(t, n, &result);
      return result;
    }
    const int col = t.Column(entering);
    if (result.pivots > 0) {
      row = t.RatioTest(col);
      if (row < 0) {
        result.status = LemkeStatus::kRay;
        Extract(t, n, &result);
        return result;
      }
    }
    const LcpVariable leaving = t.basis().variables[row];
    Trace(options, result.pivots + 1, entering, leaving, t.Rhs(row) / t.Entry(row, col));
    t.Pivot(row, col, entering);
    ++result.pivots;
    if (leaving.kind == LcpVariable::kZ0) break;
    entering = leaving.Complement();
  }
  result.status = LemkeStatus::kSolved;
  Extract(t, n, &result);
  return result;
}

bool IsLcpSolution(const NumericLcp& lcp, const std::vector<Rational>& z,
                   const std::vector<Rational>& w) {
  const int n = lcp.size();
  if (static_cast<int>(z.size()) != n || static_cast<int>(w.size()) != n) return false;
  std::vector<Rational> mz = MatVec(lcp.M, z);
  for (int i = 0; i < n; ++i) {
    if (z[i] < 0 || w[i] < 0) return false;
    if (z[i] != 0 && w[i] != 0) return false;
    if (mz[i] + lcp.b[i] != w[i]) return false;
  }
  return true;
}

bool BasicSolution(const NumericLcp& lcp, const Basis& basis, std::vector<Rational>* z,
                   std::vector<Rational>* w) {
  CheckShape(lcp);
  const int n = lcp.size();
  if (basis.size() != n) throw std::invalid_argument("basis has the wrong size");
  // Columns of [I, -M, -d] selected by the basis, augmented with b.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (int j = 0; j < n; ++j) {
    const LcpVariable& v = basis.variables[j];
    for (int i = 0; i < n; ++i) {
      switch (v.kind) {
        case LcpVariable::kW: a[i][j] = (i == v.index) ? 1 : 0; break;
        case LcpVariable::kZ: a[i][j] = -lcp.M(i, v.index); break;
        case LcpVariable::kZ0: a[i][j] = -lcp.d[i]; break;
      }
    }
  }
  for (int i = 0; i < n; ++i) a[i][n] = lcp.b[i];
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return false;
    std::swap(a[p], a[c]);
    const Rational inv = 1 / a[c][c];
    for (int k = c; k <= n; ++k) a[c][k] *= inv;
    for (int i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (int k = c; k <= n; ++k) a[i][k] -= f * a[c][k];
    }
  }
  z->assign(n, Rational(0));
  w->assign(n, Rational(0));
  for (int j = 0; j < n; ++j) {
    const LcpVariable& v = basis.variables[j];
    if (v.kind == LcpVariable::kW) (*w)[v.index] = a[j][n];
    if (v.kind == LcpVariable::kZ) (*z)[v.index] = a[j][n];
  }
  return true;
}

}  // namespace efpe
