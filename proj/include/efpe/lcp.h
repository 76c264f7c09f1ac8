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

#ifndef EFPE_LCP_H_
#define EFPE_LCP_H_

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "efpe/eps_poly.h"
#include "efpe/lemke.h"
#include "efpe/matrix.h"
#include "efpe/rational.h"
#include "efpe/sequence_form.h"

namespace efpe {

// Index ranges of z = (r̃0, r̃1, v0+, v0-, v1+, v1-). k_i = |H_i| + 1.
struct LcpLayout {
  int n0 = 0, n1 = 0, k0 = 0, k1 = 0;

  int r_begin(int player) const { return player == 0 ? 0 : n0; }
  int r_size(int player) const { return player == 0 ? n0 : n1; }
  int v_plus_begin(int player) const { return player == 0 ? n0 + n1 : n0 + n1 + 2 * k0; }
  int v_minus_begin(int player) const { return v_plus_begin(player) + v_size(player); }
  int v_size(int player) const { return player == 0 ? k0 : k1; }
  int size() const { return n0 + n1 + 2 * k0 + 2 * k1; }
  // "r0[3]", "v1-[0]", ...
  std::string Name(int index) const;
};

// Shifts every leaf payoff by a common constant so that all of them become
// strictly negative: -(max + 1) when the largest payoff is >= 0, else 0.
struct OffsetSequenceForm {
  SequenceForm sf;
  Rational offset;
};
OffsetSequenceForm ApplyNegativeOffset(const SequenceForm& sf);

struct LcpInstance {
  PolyMatrix M;
  std::vector<Rational> b;
  LcpLayout layout;
  Rational offset;
  std::array<RationalMatrix, kNumPlayers> payoff;  // offset applied
  std::array<PolyMatrix, kNumPlayers> r_inverse;

  int size() const { return layout.size(); }
};

// The perturbed LCP. Block rows of M(ε), with U_i the (offset) payoff
// matrices and R_i = R_i(ε):
//   r̃0:  [0, -R0⁻ᵀ U0 R1⁻¹, R0⁻ᵀ F0ᵀ, -R0⁻ᵀ F0ᵀ, 0, 0]
//   r̃1:  [-R1⁻ᵀ U1ᵀ R0⁻¹, 0, 0, 0, R1⁻ᵀ F1ᵀ, -R1⁻ᵀ F1ᵀ]
//   v0±: [∓F0 R0⁻¹, 0, ...]
//   v1±: [0, ∓F1 R1⁻¹, ...]
// and b = (0, 0, f0, -f0, f1, -f1).
LcpInstance BuildLcp(const SequenceForm& sf, bool apply_offset = true);

// M(ε), b and covering vector (1, ..., 1) at a given ε.
NumericLcp AtEpsilon(const LcpInstance& lcp, const Rational& epsilon);

// Lowest common multiple of every coefficient denominator in M(ε) and b.
Integer IntegerScale(const LcpInstance& lcp);

struct NppCertificate {
  Integer v_b;  // largest |coefficient| after integer scaling
  int m = 0;    // max(1, max degree of M(ε))
  int n = 0;    // LCP dimension plus the covering column
  Integer v_d;  // ⌈n^(n/2)⌉ (m V_B)^n
  Integer v_n;  // V_B V_D
  Integer v_star;  // 2 max(V_N, V_D)
  int nu = 0;      // max branching factor; 0 if unknown
  Rational epsilon_star;  // min(1/V*, 1/ν)
  std::size_t bits = 0;   // bit length of V*
};

NppCertificate ComputeNppBounds(const Integer& v_b, int m, int n, int nu);
NppCertificate ComputeNpp(const LcpInstance& lcp, int nu);

// The basic solution B(ε)⁻¹ b of the integer-scaled instance
// (scale M(ε), scale b). Entry i belongs to basis.variables[i]; z values
// equal numerators[i] / denominator and w values equal
// numerators[i] / (scale * denominator). All coefficients are integers.
struct OptimalityCertificate {
  Basis basis;
  Integer scale;
  std::vector<EpsPoly> numerators;
  EpsPoly denominator;

  // Values of the basic variables of the original instance at ε.
  std::vector<Rational> Values(const Rational& epsilon) const;
  PolyFraction Fraction(int row) const;
};

// Throws SolverError for an identically singular basis matrix.
OptimalityCertificate ComputeOptimalityCertificate(const LcpInstance& lcp,
                                                   const Basis& basis);

// Sign analysis of a certificate near zero.
struct CertificateSigns {
  std::vector<int> signs;  // per basis row, constant on (0, threshold]
  Rational threshold;      // min over rows of the integer-rational bound
  bool nonnegative = false;  // every sign is 0 or +1
};
CertificateSigns ClassifyCertificate(const OptimalityCertificate& cert);

// True iff every basic variable is >= 0 for all ε in (0, epsilon].
bool CertifiedOn(const OptimalityCertificate& cert, const Rational& epsilon);

// Sufficient condition for Lemke to end in a solution: the bilinear block
// equals R0⁻ᵀ (-U0 - U1) R1⁻¹ with -U0 - U1 >= 0, and the dual blocks are
// skew. Empty result means all conditions hold.
std::vector<std::string> CheckLemkePreconditions(const LcpInstance& lcp);

}  // namespace efpe

#endif  // EFPE_LCP_H_
