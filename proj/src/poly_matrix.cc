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

#include "efpe/poly_matrix.h"

#include <stdexcept>
#include <utility>

#include "efpe/errors.h"

namespace efpe {
namespace {

struct Elimination {
  PolyMatrix a;
  bool singular = false;
  int sign = 1;
};

// Bareiss forward elimination on the leading n columns of `a`. After the
// call a(k, k) is the k-th leading principal minor of the row-permuted
// input, so a(n-1, n-1) equals sign * det.
Elimination Eliminate(PolyMatrix a, int n) {
  Elimination out;
  EpsPoly prev(1);
  const int cols = a.cols();
  for (int k = 0; k < n; ++k) {
    int pivot_row = -1;
    for (int r = k; r < n; ++r) {
      if (a(r, k).is_zero()) continue;
      if (pivot_row < 0 || a(r, k).degree() < a(pivot_row, k).degree()) {
        pivot_row = r;
      }
    }
    if (pivot_row < 0) {
      out.singular = true;
      out.a = std::move(a);
      return out;
    }
    if (pivot_row != k) {
      for (int c = 0; c < cols; ++c) std::swap(a(k, c), a(pivot_row, c));
      out.sign = -out.sign;
    }
    const EpsPoly pivot = a(k, k);
    const bool trivial_scale = pivot == prev;
    for (int i = k + 1; i < n; ++i) {
      const EpsPoly lead = a(i, k);
      for (int j = k + 1; j < cols; ++j) {
        EpsPoly& cell = a(i, j);
        if (lead.is_zero()) {
          if (trivial_scale || cell.is_zero()) continue;
          cell = DivideExact(cell * pivot, prev);
          continue;
        }
        EpsPoly value = cell * pivot - lead * a(k, j);
        cell = (prev == EpsPoly(1)) ? std::move(value) : DivideExact(value, prev);
      }
      a(i, k) = EpsPoly();
    }
    prev = pivot;
  }
  out.a = std::move(a);
  return out;
}

}  // namespace

PolyMatrix ToPolyMatrix(const RationalMatrix& m) {
  PolyMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(r, c) = EpsPoly(m(r, c));
  return out;
}

RationalMatrix Evaluate(const PolyMatrix& m, const Rational& x) {
  RationalMatrix out(m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).Eval(x);
  return out;
}

std::vector<Rational> Evaluate(const std::vector<EpsPoly>& v, const Rational& x) {
  std::vector<Rational> out;
  out.reserve(v.size());
  for (const EpsPoly& p : v) out.push_back(p.Eval(x));
  return out;
}

int MaxDegree(const PolyMatrix& m) {
  int d = -1;
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) d = std::max(d, m(r, c).degree());
  return d;
}

bool IsLowerTriangular(const PolyMatrix& m) {
  for (int r = 0; r < m.rows(); ++r)
    for (int c = r + 1; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) return false;
  return true;
}

EpsPoly Determinant(const PolyMatrix& m) {
  if (!m.is_square()) {
    throw std::invalid_argument("determinant of non-square " + m.ShapeString());
  }
  const int n = m.rows();
  if (n == 0) return EpsPoly(1);
  Elimination e = Eliminate(m, n);
  if (e.singular) return EpsPoly();
  EpsPoly det = e.a(n - 1, n - 1);
  return e.sign < 0 ? -det : det;
}

CommonDenominatorSolution SolveCommon(const PolyMatrix& b_matrix,
                                      const std::vector<EpsPoly>& rhs) {
  if (!b_matrix.is_square() || static_cast<int>(rhs.size()) != b_matrix.rows()) {
    throw std::invalid_argument("Solve: dimension mismatch (" +
                                b_matrix.ShapeString() + ", rhs " +
                                std::to_string(rhs.size()) + ")");
  }
  const int n = b_matrix.rows();
  CommonDenominatorSolution out;
  if (n == 0) {
    out.denominator = EpsPoly(1);
    return out;
  }
  PolyMatrix aug(n, n + 1);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = b_matrix(r, c);
    aug(r, n) = rhs[r];
  }
  Elimination e = Eliminate(std::move(aug), n);
  if (e.singular) throw SolverError("basis matrix is identically singular");
  const PolyMatrix& a = e.a;
  const EpsPoly d = a(n - 1, n - 1);
  std::vector<EpsPoly> y(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    EpsPoly acc = d * a(i, n);
    for (int j = i + 1; j < n; ++j) {
      if (a(i, j).is_zero() || y[j].is_zero()) continue;
      acc -= a(i, j) * y[j];
    }
    y[i] = (a(i, i) == EpsPoly(1)) ? std::move(acc) : DivideExact(acc, a(i, i));
  }
  out.numerators = std::move(y);
  out.denominator = d;
  return out;
}

std::vector<PolyFraction> Solve(const PolyMatrix& b_matrix,
                                const std::vector<EpsPoly>& rhs) {
  CommonDenominatorSolution s = SolveCommon(b_matrix, rhs);
  std::vector<PolyFraction> out;
  out.reserve(s.numerators.size());
  for (EpsPoly& num : s.numerators) {
    out.push_back(PolyFraction{std::move(num), s.denominator}.Reduced());
  }
  return out;
}

}  // namespace efpe
