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

#include "efpe/zero_sum.h"

#include <utility>

#include "efpe/errors.h"
#include "efpe/lcp.h"
#include "efpe/perturbation.h"
#include "efpe/poly_matrix.h"
#include "efpe/sign_threshold.h"

namespace efpe {
namespace {

// Multiplies numerator and denominator by the lcm of their coefficient
// denominators.
PolyFraction IntegerForm(PolyFraction f) {
  Integer l = 1;
  for (const EpsPoly* p : {&f.num, &f.den}) {
    for (const Rational& c : p->coefficients()) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
  }
  f.num *= Rational(l);
  f.den *= Rational(l);
  return f;
}

}  // namespace

ZeroSumCheck CheckZeroSum(const SequenceForm& sf) {
  ZeroSumCheck out;
  const RationalMatrix& u0 = sf.payoff[0];
  const RationalMatrix& u1 = sf.payoff[1];
  for (int i = 0; i < u0.rows(); ++i) {
    for (int j = 0; j < u0.cols(); ++j) {
      if (u0(i, j) + u1(i, j) != 0) {
        out.zero_sum = false;
        out.q0 = i;
        out.q1 = j;
        out.witness = "payoffs " + ToString(u0(i, j)) + " and " + ToString(u1(i, j)) +
                      " at sequence pair (" + std::to_string(i) + ", " +
                      std::to_string(j) + ")";
        return out;
      }
    }
  }
  return out;
}

LinearProgram PerturbedLp::AtEpsilon(const Rational& epsilon) const {
  return LinearProgram{Evaluate(A, epsilon), b, c};
}

PerturbedLp BuildPerturbedLp(const SequenceForm& sf, int maximizer) {
  const int p = maximizer;
  const int o = 1 - p;
  const PlayerSequences& sp = sf.players[p];
  const PlayerSequences& so = sf.players[o];
  PerturbedLp lp;
  lp.maximizer = p;
  lp.n_r = sp.size();
  lp.n_v = so.num_infosets() + 1;
  lp.n_s = so.size();
  lp.r_inverse = InvertPerturbationMatrix(sp);
  const PolyMatrix ro = InvertPerturbationMatrix(so);
  const PolyMatrix payoff =
      ToPolyMatrix(p == 0 ? sf.payoff[0] : sf.payoff[1].Transposed());
  const PolyMatrix a = lp.r_inverse.Transposed() * payoff * ro;
  const PolyMatrix fp = ToPolyMatrix(sp.constraints) * lp.r_inverse;
  const PolyMatrix fo = ro.Transposed() * ToPolyMatrix(so.constraints).Transposed();

  const int rows = (sp.num_infosets() + 1) + lp.n_s;
  lp.A = PolyMatrix(rows, lp.num_columns());
  lp.A.SetBlock(0, 0, fp);
  const int r0 = sp.num_infosets() + 1;
  lp.A.SetBlock(r0, 0, -a.Transposed());
  lp.A.SetBlock(r0, lp.v_plus_begin(), fo);
  lp.A.SetBlock(r0, lp.v_minus_begin(), -fo);
  lp.A.SetBlock(r0, lp.s_begin(), PolyMatrix::Identity(lp.n_s));
  lp.b.assign(rows, Rational(0));
  for (int k = 0; k < r0; ++k) lp.b[k] = sp.constraint_rhs[k];
  lp.c.assign(lp.num_columns(), Rational(0));
  for (int k = 0; k < lp.n_v; ++k) {
    lp.c[lp.v_plus_begin() + k] = so.constraint_rhs[k];
    lp.c[lp.v_minus_begin() + k] = -so.constraint_rhs[k];
  }
  return lp;
}

std::vector<Rational> LpCertificate::Values(int num_columns, const Rational& epsilon) const {
  std::vector<Rational> x(num_columns);
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
    x[basis[i]] = primal[i].Eval(epsilon);
  }
  return x;
}

PolyFraction LpCertificate::Column(int column) const {
  for (int i = 0; i < static_cast<int>(basis.size()); ++i) {
    if (basis[i] == column) return primal[i];
  }
  return PolyFraction{};
}

LpCertificate CertifyLpBasis(const PerturbedLp& lp, const std::vector<int>& basis) {
  const int m = lp.A.rows();
  if (static_cast<int>(basis.size()) != m) {
    throw SolverError("LP basis does not cover every constraint row");
  }
  LpCertificate cert;
  cert.basis = basis;
  PolyMatrix b_matrix(m, m);
  std::vector<EpsPoly> cost(m);
  for (int k = 0; k < m; ++k) {
    for (int i = 0; i < m; ++i) b_matrix(i, k) = lp.A(i, basis[k]);
    cost[k] = EpsPoly(lp.c[basis[k]]);
  }
  std::vector<EpsPoly> rhs(m);
  for (int i = 0; i < m; ++i) rhs[i] = EpsPoly(lp.b[i]);

  const CommonDenominatorSolution x = SolveCommon(b_matrix, rhs);
  const CommonDenominatorSolution y = SolveCommon(b_matrix.Transposed(), cost);

  cert.primal_numerators = x.numerators;
  cert.denominator = x.denominator;
  bool first = true;
  cert.optimal = true;
  auto track = [&](const PolyFraction& f, int want) {
    SignThreshold t = IntegerRationalSign(f.num, f.den);
    if (first || t.epsilon < cert.threshold) cert.threshold = t.epsilon;
    first = false;
    if (t.sign * want < 0) cert.optimal = false;
    return t.sign;
  };
  for (int i = 0; i < m; ++i) {
    cert.primal.push_back(IntegerForm({x.numerators[i], x.denominator}));
    cert.primal_signs.push_back(track(cert.primal.back(), +1));
  }
  std::vector<bool> basic(lp.num_columns(), false);
  for (int j : basis) basic[j] = true;
  for (int j = 0; j < lp.num_columns(); ++j) {
    if (basic[j]) {
      cert.reduced_costs.push_back(PolyFraction{});
      cert.reduced_signs.push_back(0);
      continue;
    }
    EpsPoly num = y.denominator * lp.c[j];
    for (int i = 0; i < m; ++i) {
      if (lp.A(i, j).is_zero() || y.numerators[i].is_zero()) continue;
      num -= y.numerators[i] * lp.A(i, j);
    }
    cert.reduced_costs.push_back(IntegerForm({num, y.denominator}));
    cert.reduced_signs.push_back(track(cert.reduced_costs.back(), -1));
  }
  if (first) cert.threshold = 1;
  return cert;
}

ZeroSumSolution SolveZeroSum(const SequenceForm& sf, const Rational& epsilon) {
  const ZeroSumCheck check = CheckZeroSum(sf);
  if (!check.zero_sum) throw SolverError("game is not zero-sum: " + check.witness);
  if (epsilon < 0) throw SolverError("epsilon must be non-negative");
  const OffsetSequenceForm shifted = ApplyNegativeOffset(sf);
  ZeroSumSolution out;
  out.offset = shifted.offset;
  for (int p = 0; p < kNumPlayers; ++p) {
    out.programs[p] = BuildPerturbedLp(shifted.sf, p);
    out.solutions[p] = SolveLp(out.programs[p].AtEpsilon(epsilon));
    out.pivots += out.solutions[p].pivots;
    if (out.solutions[p].status != LpStatus::kOptimal) {
      throw SolverError("perturbed program of player " + std::to_string(p + 1) +
                        (out.solutions[p].status == LpStatus::kInfeasible
                             ? " is infeasible"
                             : " is unbounded"));
    }
    const std::vector<Rational>& x = out.solutions[p].x;
    const std::vector<Rational> r_tilde(x.begin(), x.begin() + out.programs[p].n_r);
    out.plans[p] = MatVec(Evaluate(out.programs[p].r_inverse, epsilon), r_tilde);
  }
  out.value = out.solutions[0].objective - out.offset;
  return out;
}

}  // namespace efpe
