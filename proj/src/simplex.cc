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

#include "efpe/simplex.h"

#include <stdexcept>
#include <utility>

namespace efpe {
namespace {

class SimplexTableau {
 public:
  explicit SimplexTableau(const LinearProgram& lp) : m_(lp.A.rows()), n_(lp.A.cols()) {
    std::vector<std::vector<Rational>> a(m_, std::vector<Rational>(n_ + 1));
    for (int i = 0; i < m_; ++i) {
      const bool flip = lp.b[i] < 0;
      for (int j = 0; j < n_; ++j) a[i][j] = flip ? Rational(-lp.A(i, j)) : lp.A(i, j);
      a[i][n_] = flip ? Rational(-lp.b[i]) : lp.b[i];
    }
    basis_.assign(m_, -1);
    for (int j = 0; j < n_; ++j) {
      int row = -1;
      bool unit = true;
      for (int i = 0; i < m_ && unit; ++i) {
        if (a[i][j] == 0) continue;
        if (a[i][j] == 1 && row < 0) {
          row = i;
        } else {
          unit = false;
        }
      }
      if (unit && row >= 0 && basis_[row] < 0) basis_[row] = j;
    }
    for (int i = 0; i < m_; ++i) {
      if (basis_[i] < 0) basis_[i] = n_ + num_artificial_++;
    }
    width_ = n_ + num_artificial_;
    rows_.assign(m_, std::vector<Rational>(width_ + 1));
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) rows_[i][j] = a[i][j];
      if (basis_[i] >= n_) rows_[i][basis_[i]] = 1;
      rows_[i][width_] = a[i][n_];
    }
    row_ids_.resize(m_);
    for (int i = 0; i < m_; ++i) row_ids_[i] = i;
  }

  int num_artificial() const { return num_artificial_; }

  // Sets the objective and recomputes reduced costs. Columns from
  // `allowed_end` on may not enter.
  void SetObjective(const std::vector<Rational>& cost, int allowed_end) {
    cost_ = cost;
    allowed_end_ = allowed_end;
    reduced_.assign(width_, Rational(0));
    for (int j = 0; j < width_; ++j) {
      Rational r = cost_[j];
      for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
        if (rows_[i][j] != 0) r -= cost_[basis_[i]] * rows_[i][j];
      }
      reduced_[j] = r;
    }
  }

  // Runs Bland's rule to optimality. Returns false when unbounded.
  bool Optimize(std::int64_t* pivots) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < allowed_end_; ++j) {
        if (reduced_[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
        const Rational& a = rows_[i][enter];
        if (a <= 0) continue;
        Rational ratio = rows_[i][width_] / a;
        if (leave < 0 || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = std::move(ratio);
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter);
      ++*pivots;
    }
  }

  void Pivot(int row, int col) {
    std::vector<Rational>& pr = rows_[row];
    const Rational inv = 1 / pr[col];
    for (Rational& v : pr) {
      if (v != 0) v *= inv;
    }
    for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
      if (i == row || rows_[i][col] == 0) continue;
      const Rational f = rows_[i][col];
      for (int j = 0; j <= width_; ++j) {
        if (pr[j] != 0) rows_[i][j] -= f * pr[j];
      }
    }
    if (reduced_[col] != 0) {
      const Rational f = reduced_[col];
      for (int j = 0; j < width_; ++j) {
        if (pr[j] != 0) reduced_[j] -= f * pr[j];
      }
    }
    basis_[row] = col;
  }

  // Pivots zero-level artificials out of the basis, dropping rows that
  // have no other nonzero entry.
  void RemoveArtificials(std::vector<int>* dropped) {
    for (int i = 0; i < static_cast<int>(rows_.size());) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      int col = -1;
      for (int j = 0; j < n_ && col < 0; ++j) {
        if (rows_[i][j] != 0) col = j;
      }
      if (col >= 0) {
        Pivot(i, col);
        ++i;
      } else {
        dropped->push_back(row_ids_[i]);
        rows_.erase(rows_.begin() + i);
        basis_.erase(basis_.begin() + i);
        row_ids_.erase(row_ids_.begin() + i);
      }
    }
  }

  Rational ArtificialSum() const {
    Rational s;
    for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
      if (basis_[i] >= n_) s += rows_[i][width_];
    }
    return s;
  }

  std::vector<Rational> Solution() const {
    std::vector<Rational> x(n_);
    for (int i = 0; i < static_cast<int>(rows_.size()); ++i) {
      if (basis_[i] < n_) x[basis_[i]] = rows_[i][width_];
    }
    return x;
  }

  int width() const { return width_; }
  const std::vector<int>& basis() const { return basis_; }
  const std::vector<int>& row_ids() const { return row_ids_; }

 private:
  int m_;
  int n_;
  int num_artificial_ = 0;
  int width_ = 0;
  int allowed_end_ = 0;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> basis_;
  std::vector<int> row_ids_;
  std::vector<Rational> cost_;
  std::vector<Rational> reduced_;
};

}  // namespace

LpSolution SolveLp(const LinearProgram& lp) {
  if (static_cast<int>(lp.b.size()) != lp.A.rows() ||
      static_cast<int>(lp.c.size()) != lp.A.cols()) {
    throw std::invalid_argument("linear program dimensions disagree");
  }
  const int n = lp.A.cols();
  SimplexTableau t(lp);
  LpSolution out;

  if (t.num_artificial() > 0) {
    std::vector<Rational> phase1(t.width(), Rational(0));
    for (int j = n; j < t.width(); ++j) phase1[j] = -1;
    t.SetObjective(phase1, t.width());
    t.Optimize(&out.pivots);
    if (t.ArtificialSum() != 0) {
      out.status = LpStatus::kInfeasible;
      return out;
    }
    t.RemoveArtificials(&out.dropped_rows);
  }

  std::vector<Rational> cost(t.width(), Rational(0));
  for (int j = 0; j < n; ++j) cost[j] = lp.c[j];
  t.SetObjective(cost, n);
  if (!t.Optimize(&out.pivots)) {
    out.status = LpStatus::kUnbounded;
    return out;
  }
  out.status = LpStatus::kOptimal;
  out.x = t.Solution();
  out.objective = 0;
  for (int j = 0; j < n; ++j) out.objective += lp.c[j] * out.x[j];
  out.basis = t.basis();
  out.rows = t.row_ids();
  return out;
}

}  // namespace efpe
