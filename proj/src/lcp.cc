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

#include "efpe/lcp.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "efpe/perturbation.h"
#include "efpe/poly_matrix.h"
#include "efpe/sign_threshold.h"

namespace efpe {

std::string LcpLayout::Name(int index) const {
  for (int p = 0; p < kNumPlayers; ++p) {
    const std::string id = std::to_string(p);
    if (index >= r_begin(p) && index < r_begin(p) + r_size(p)) {
      return "r" + id + "[" + std::to_string(index - r_begin(p)) + "]";
    }
    if (index >= v_plus_begin(p) && index < v_plus_begin(p) + v_size(p)) {
      return "v" + id + "+[" + std::to_string(index - v_plus_begin(p)) + "]";
    }
    if (index >= v_minus_begin(p) && index < v_minus_begin(p) + v_size(p)) {
      return "v" + id + "-[" + std::to_string(index - v_minus_begin(p)) + "]";
    }
  }
  throw std::out_of_range("LCP index out of range");
}

OffsetSequenceForm ApplyNegativeOffset(const SequenceForm& sf) {
  OffsetSequenceForm out{sf, Rational(0)};
  bool any = false;
  Rational max;
  for (int p = 0; p < kNumPlayers; ++p) {
    for (int i = 0; i < sf.terminal.rows(); ++i) {
      for (int j = 0; j < sf.terminal.cols(); ++j) {
        if (!sf.terminal(i, j)) continue;
        if (!any || sf.payoff[p](i, j) > max) max = sf.payoff[p](i, j);
        any = true;
      }
    }
  }
  if (!any || max < 0) return out;
  out.offset = -(max + 1);
  for (int p = 0; p < kNumPlayers; ++p) {
    for (int i = 0; i < sf.terminal.rows(); ++i) {
      for (int j = 0; j < sf.terminal.cols(); ++j) {
        if (sf.terminal(i, j)) out.sf.payoff[p](i, j) += out.offset;
      }
    }
  }
  return out;
}

LcpInstance BuildLcp(const SequenceForm& sf, bool apply_offset) {
  OffsetSequenceForm shifted =
      apply_offset ? ApplyNegativeOffset(sf) : OffsetSequenceForm{sf, Rational(0)};
  const SequenceForm& s = shifted.sf;

  LcpInstance lcp;
  lcp.offset = shifted.offset;
  lcp.payoff = s.payoff;
  LcpLayout& L = lcp.layout;
  L.n0 = s.players[0].size();
  L.n1 = s.players[1].size();
  L.k0 = s.players[0].num_infosets() + 1;
  L.k1 = s.players[1].num_infosets() + 1;

  for (int p = 0; p < kNumPlayers; ++p) {
    lcp.r_inverse[p] = InvertPerturbationMatrix(s.players[p]);
  }
  const PolyMatrix& r0 = lcp.r_inverse[0];
  const PolyMatrix& r1 = lcp.r_inverse[1];
  const PolyMatrix u0 = ToPolyMatrix(s.payoff[0]);
  const PolyMatrix u1 = ToPolyMatrix(s.payoff[1]);

  lcp.M = PolyMatrix(L.size(), L.size());
  lcp.M.SetBlock(L.r_begin(0), L.r_begin(1), -(r0.Transposed() * u0 * r1));
  lcp.M.SetBlock(L.r_begin(1), L.r_begin(0), -(r1.Transposed() * u1.Transposed() * r0));
  lcp.b.assign(L.size(), Rational(0));
  for (int p = 0; p < kNumPlayers; ++p) {
    const PolyMatrix& rinv = lcp.r_inverse[p];
    const PolyMatrix f = ToPolyMatrix(s.players[p].constraints);
    const PolyMatrix fr = f * rinv;
    const PolyMatrix frt = fr.Transposed();
    lcp.M.SetBlock(L.r_begin(p), L.v_plus_begin(p), frt);
    lcp.M.SetBlock(L.r_begin(p), L.v_minus_begin(p), -frt);
    lcp.M.SetBlock(L.v_plus_begin(p), L.r_begin(p), -fr);
    lcp.M.SetBlock(L.v_minus_begin(p), L.r_begin(p), fr);
    const std::vector<Rational>& rhs = s.players[p].constraint_rhs;
    for (int k = 0; k < L.v_size(p); ++k) {
      lcp.b[L.v_plus_begin(p) + k] = rhs[k];
      lcp.b[L.v_minus_begin(p) + k] = -rhs[k];
    }
  }
  return lcp;
}

NumericLcp AtEpsilon(const LcpInstance& lcp, const Rational& epsilon) {
  return MakeNumericLcp(Evaluate(lcp.M, epsilon), lcp.b);
}

Integer IntegerScale(const LcpInstance& lcp) {
  Integer scale = 1;
  auto absorb = [&scale](const Rational& v) {
    if (v.get_den() != 1) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), v.get_den_mpz_t());
  };
  for (int i = 0; i < lcp.M.rows(); ++i) {
    for (int j = 0; j < lcp.M.cols(); ++j) {
      for (const Rational& c : lcp.M(i, j).coefficients()) absorb(c);
    }
  }
  for (const Rational& v : lcp.b) absorb(v);
  return scale;
}

NppCertificate ComputeNppBounds(const Integer& v_b, int m, int n, int nu) {
  if (v_b <= 0 || m <= 0 || n <= 0) {
    throw std::invalid_argument("NPP bounds need positive V_B, m and n");
  }
  NppCertificate c;
  c.v_b = v_b;
  c.m = m;
  c.n = n;
  c.nu = nu;
  Integer n_pow;
  mpz_ui_pow_ui(n_pow.get_mpz_t(), static_cast<unsigned long>(n),
                static_cast<unsigned long>(n));
  Integer root;
  mpz_sqrt(root.get_mpz_t(), n_pow.get_mpz_t());
  if (root * root < n_pow) root += 1;
  Integer base = v_b * m;
  Integer power;
  mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n));
  c.v_d = root * power;
  c.v_n = c.v_b * c.v_d;
  c.v_star = 2 * std::max(c.v_n, c.v_d);
  c.epsilon_star = Rational(1) / Rational(c.v_star);
  if (nu > 0 && Rational(1, nu) < c.epsilon_star) c.epsilon_star = Rational(1, nu);
  c.bits = BitLength(c.v_star);
  return c;
}

NppCertificate ComputeNpp(const LcpInstance& lcp, int nu) {
  const Integer scale = IntegerScale(lcp);
  Integer v_b = scale;  // the covering column, scaled
  auto absorb = [&](const Rational& v) {
    Rational s = abs(v) * scale;
    if (s.get_num() > v_b) v_b = s.get_num();
  };
  for (int i = 0; i < lcp.M.rows(); ++i) {
    for (int j = 0; j < lcp.M.cols(); ++j) {
      for (const Rational& c : lcp.M(i, j).coefficients()) absorb(c);
    }
  }
  for (const Rational& v : lcp.b) absorb(v);
  return ComputeNppBounds(v_b, std::max(1, MaxDegree(lcp.M)), lcp.size() + 1, nu);
}

std::vector<Rational> OptimalityCertificate::Values(const Rational& epsilon) const {
  std::vector<Rational> out;
  out.reserve(numerators.size());
  for (int i = 0; i < static_cast<int>(numerators.size()); ++i) {
    out.push_back(Fraction(i).Eval(epsilon));
  }
  return out;
}

PolyFraction OptimalityCertificate::Fraction(int row) const {
  const bool is_w = basis.variables.at(row).kind == LcpVariable::kW;
  return PolyFraction{numerators.at(row), is_w ? denominator * Rational(scale) : denominator};
}

OptimalityCertificate ComputeOptimalityCertificate(const LcpInstance& lcp,
                                                   const Basis& basis) {
  const int n = lcp.size();
  if (basis.size() != n) throw std::invalid_argument("basis has the wrong size");
  OptimalityCertificate cert;
  cert.basis = basis;
  cert.scale = IntegerScale(lcp);
  const Rational scale(cert.scale);
  std::vector<EpsPoly> b(n);
  for (int i = 0; i < n; ++i) b[i] = EpsPoly(lcp.b[i] * scale);
  auto scaled_m = [&](int i, int j) { return lcp.M(i, j) * scale; };

  if (basis.IsComplementary()) {
    // With S the basic z indices, the rows outside the basic w's are
    // exactly S: M_SS z_S = -b_S, then w_T = b_T + M_TS z_S.
    std::vector<int> support;
    std::vector<int> position(n, -1);
    for (const LcpVariable& v : basis.variables) {
      if (v.kind == LcpVariable::kZ) {
        position[v.index] = static_cast<int>(support.size());
        support.push_back(v.index);
      }
    }
    std::sort(support.begin(), support.end());
    for (int k = 0; k < static_cast<int>(support.size()); ++k) position[support[k]] = k;
    const int s = static_cast<int>(support.size());
    PolyMatrix mss(s, s);
    std::vector<EpsPoly> rhs(s);
    for (int r = 0; r < s; ++r) {
      for (int c = 0; c < s; ++c) mss(r, c) = scaled_m(support[r], support[c]);
      rhs[r] = -b[support[r]];
    }
    CommonDenominatorSolution sol = SolveCommon(mss, rhs);
    cert.denominator = sol.denominator;
    for (const LcpVariable& v : basis.variables) {
      if (v.kind == LcpVariable::kZ) {
        cert.numerators.push_back(sol.numerators[position[v.index]]);
        continue;
      }
      EpsPoly acc = cert.denominator * b[v.index];
      for (int k = 0; k < s; ++k) {
        if (lcp.M(v.index, support[k]).is_zero() || sol.numerators[k].is_zero()) continue;
        acc += scaled_m(v.index, support[k]) * sol.numerators[k];
      }
      cert.numerators.push_back(std::move(acc));
    }
    return cert;
  }

  PolyMatrix full(n, n);
  for (int c = 0; c < n; ++c) {
    const LcpVariable& v = basis.variables[c];
    for (int r = 0; r < n; ++r) {
      switch (v.kind) {
        case LcpVariable::kW:
          if (r == v.index) full(r, c) = EpsPoly(1);
          break;
        case LcpVariable::kZ:
          full(r, c) = -scaled_m(r, v.index);
          break;
        case LcpVariable::kZ0:
          full(r, c) = EpsPoly(-scale);
          break;
      }
    }
  }
  CommonDenominatorSolution sol = SolveCommon(full, b);
  cert.numerators = std::move(sol.numerators);
  cert.denominator = std::move(sol.denominator);
  return cert;
}

CertificateSigns ClassifyCertificate(const OptimalityCertificate& cert) {
  CertificateSigns out;
  out.nonnegative = true;
  bool first = true;
  for (const EpsPoly& num : cert.numerators) {
    SignThreshold t = IntegerRationalSign(num, cert.denominator);
    out.signs.push_back(t.sign);
    if (t.sign < 0) out.nonnegative = false;
    if (first || t.epsilon < out.threshold) out.threshold = t.epsilon;
    first = false;
  }
  if (first) out.threshold = 1;
  return out;
}

bool CertifiedOn(const OptimalityCertificate& cert, const Rational& epsilon) {
  CertificateSigns s = ClassifyCertificate(cert);
  return s.nonnegative && epsilon > 0 && epsilon <= s.threshold;
}

std::vector<std::string> CheckLemkePreconditions(const LcpInstance& lcp) {
  std::vector<std::string> issues;
  const LcpLayout& L = lcp.layout;
  const RationalMatrix sum = lcp.payoff[0] + lcp.payoff[1];
  for (int i = 0; i < sum.rows(); ++i) {
    for (int j = 0; j < sum.cols(); ++j) {
      if (sum(i, j) > 0) {
        issues.push_back("-U0 - U1 is negative at (" + std::to_string(i) + ", " +
                         std::to_string(j) + ")");
      }
    }
  }
  const PolyMatrix& r0 = lcp.r_inverse[0];
  const PolyMatrix& r1 = lcp.r_inverse[1];
  const PolyMatrix bilinear = lcp.M.Block(L.r_begin(0), L.r_begin(1), L.n0, L.n1) +
                              lcp.M.Block(L.r_begin(1), L.r_begin(0), L.n1, L.n0).Transposed();
  if (!(bilinear == r0.Transposed() * ToPolyMatrix(-sum) * r1)) {
    issues.push_back("bilinear block differs from R0^-T (-U0 - U1) R1^-1");
  }
  for (int p = 0; p < kNumPlayers; ++p) {
    for (int begin : {L.v_plus_begin(p), L.v_minus_begin(p)}) {
      const PolyMatrix upper = lcp.M.Block(L.r_begin(p), begin, L.r_size(p), L.v_size(p));
      const PolyMatrix lower = lcp.M.Block(begin, L.r_begin(p), L.v_size(p), L.r_size(p));
      if (!(upper + lower.Transposed() == PolyMatrix(upper.rows(), upper.cols()))) {
        issues.push_back("dual blocks of player " + std::to_string(p) + " are not skew");
      }
    }
  }
  return issues;
}

}  // namespace efpe
