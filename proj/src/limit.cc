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

#include "efpe/limit.h"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "efpe/errors.h"
#include "efpe/lemke.h"
#include "efpe/perturbation.h"
#include "efpe/poly_matrix.h"
#include "efpe/zero_sum.h"

namespace efpe {
namespace {

constexpr int kMaxRefinements = 64;

void CheckEpsilon(const Rational& epsilon, int nu) {
  if (epsilon <= 0) throw SolverError("epsilon must be positive, got " + ToString(epsilon));
  if (nu > 0 && epsilon * nu > 1) {
    throw SolverError("epsilon " + ToString(epsilon) + " exceeds 1/" + std::to_string(nu) +
                      ", the largest feasible floor");
  }
}

SolverPath ChoosePath(PathChoice choice, const SequenceForm& sf) {
  if (choice == PathChoice::kLcp) return SolverPath::kLcp;
  const ZeroSumCheck zs = CheckZeroSum(sf);
  if (choice == PathChoice::kLp && !zs.zero_sum) {
    throw SolverError("the LP route needs a zero-sum game: " + zs.witness);
  }
  return zs.zero_sum ? SolverPath::kLp : SolverPath::kLcp;
}

LemkeResult RunLemke(const LcpInstance& lcp, const Rational& epsilon,
                     const SolveOptions& options) {
  const NumericLcp numeric = AtEpsilon(lcp, epsilon);
  LemkeOptions lemke;
  lemke.max_pivots = options.max_pivots;
  lemke.trace = options.trace;
  LemkeResult r = LemkeSolve(numeric, lemke);
  switch (r.status) {
    case LemkeStatus::kSolved:
      break;
    case LemkeStatus::kRay:
      throw SolverError("Lemke's algorithm ended on a secondary ray at epsilon " +
                        ToString(epsilon));
    case LemkeStatus::kBudgetExceeded:
      throw SolverError("pivot budget of " + std::to_string(options.max_pivots) +
                        " exhausted");
  }
  if (!IsLcpSolution(numeric, r.z, r.w)) {
    throw SolverError("Lemke's algorithm returned a point that does not solve the LCP");
  }
  return r;
}

std::vector<Rational> Slice(const std::vector<Rational>& v, int begin, int size) {
  return {v.begin() + begin, v.begin() + begin + size};
}

std::array<Rational, kNumPlayers> Utilities(const SequenceForm& sf,
                                            const std::array<RealizationPlan, kNumPlayers>& r) {
  return ExpectedUtilities(sf, r[0], r[1]);
}

EquilibriumResult LimitFromCertificate(const SequenceForm& sf, const LcpInstance& lcp,
                                       const OptimalityCertificate& cert) {
  const CertificateSigns signs = ClassifyCertificate(cert);
  if (!signs.nonnegative) {
    throw SolverError("basis certificate is negative near zero; the basis is not an NPP basis");
  }
  const std::array<TransformedPlan, kNumPlayers> plans = TransformedPlans(lcp, cert);
  EquilibriumResult result;
  result.kind = ResultKind::kEfpeLimit;
  result.path = SolverPath::kLcp;
  for (int p = 0; p < kNumPlayers; ++p) {
    PlanLimit limit = LimitOfPlan(sf, p, lcp.r_inverse[p], plans[p]);
    result.realization[p] = std::move(limit.realization);
    result.behavioral[p] = std::move(limit.behavioral);
  }
  result.basis = cert.basis;
  result.offset = lcp.offset;
  result.utilities = Utilities(sf, result.realization);
  return result;
}

std::array<TransformedPlan, kNumPlayers> LpTransformedPlans(
    const std::array<PerturbedLp, kNumPlayers>& programs,
    const std::array<LpCertificate, kNumPlayers>& certs) {
  std::array<TransformedPlan, kNumPlayers> out;
  for (int p = 0; p < kNumPlayers; ++p) {
    out[p].numerators.assign(programs[p].n_r, EpsPoly());
    out[p].denominator = certs[p].denominator;
    for (int i = 0; i < static_cast<int>(certs[p].basis.size()); ++i) {
      const int col = certs[p].basis[i];
      if (col < programs[p].n_r) out[p].numerators[col] = certs[p].primal_numerators[i];
    }
  }
  return out;
}

EquilibriumResult LimitFromLp(const SequenceForm& sf,
                              const std::array<PerturbedLp, kNumPlayers>& programs,
                              const std::array<LpCertificate, kNumPlayers>& certs) {
  const std::array<TransformedPlan, kNumPlayers> plans = LpTransformedPlans(programs, certs);
  EquilibriumResult result;
  result.kind = ResultKind::kEfpeLimit;
  result.path = SolverPath::kLp;
  for (int p = 0; p < kNumPlayers; ++p) {
    PlanLimit limit = LimitOfPlan(sf, p, programs[p].r_inverse, plans[p]);
    result.realization[p] = std::move(limit.realization);
    result.behavioral[p] = std::move(limit.behavioral);
    result.lp_bases[p] = certs[p].basis;
  }
  result.utilities = Utilities(sf, result.realization);
  return result;
}

void SelfVerify(const Game& game, const EquilibriumResult& result, const SolveOptions& options) {
  if (!options.self_verify) return;
  const CheckReport report = VerifyResult(game, result);
  if (!report.ok()) throw SolverError("self-verification failed:\n" + report.Summary());
}

// Perturbed plans at δ decoded from transformed coordinates.
BehavioralProfile DecodeAt(const SequenceForm& sf,
                           const std::array<PolyMatrix, kNumPlayers>& r_inverse,
                           const std::array<std::vector<Rational>, kNumPlayers>& r_tilde,
                           const Rational& delta,
                           std::array<RealizationPlan, kNumPlayers>* plans) {
  BehavioralProfile profile;
  for (int p = 0; p < kNumPlayers; ++p) {
    (*plans)[p] = MatVec(Evaluate(r_inverse[p], delta), r_tilde[p]);
    profile[p] = RealizationToBehavioral(sf, p, (*plans)[p]);
  }
  return profile;
}

void CheckPerturbedAt(const Game& game, const SequenceForm& sf,
                      const std::array<PolyMatrix, kNumPlayers>& r_inverse,
                      const std::array<std::vector<Rational>, kNumPlayers>& r_tilde,
                      const Rational& delta, CheckReport* report) {
  std::array<RealizationPlan, kNumPlayers> plans;
  const BehavioralProfile profile = DecodeAt(sf, r_inverse, r_tilde, delta, &plans);
  for (int p = 0; p < kNumPlayers; ++p) {
    if (!IsRealizationPlan(sf, p, plans[p])) {
      report->violations.push_back({-1, -1, "basis replay at " + ToString(delta) +
                                                " gives an infeasible plan for player " +
                                                game.player_names()[p]});
      return;
    }
  }
  const CheckReport r = CheckPerturbedEquilibrium(game, profile, delta);
  for (const Violation& v : r.violations) {
    report->violations.push_back(
        {v.infoset, v.action, "at epsilon " + ToString(delta) + ": " + v.message});
  }
}

void CompareLimit(const EquilibriumResult& replayed, const EquilibriumResult& reported,
                  CheckReport* report) {
  if (replayed.realization != reported.realization ||
      replayed.behavioral != reported.behavioral) {
    report->violations.push_back(
        {-1, -1, "reported strategies differ from the limit of the recorded basis"});
  }
}

void ReplayLcp(const Game& game, const SequenceForm& sf, const EquilibriumResult& result,
               CheckReport* report) {
  const LcpInstance lcp = BuildLcp(sf);
  if (result.basis->size() != lcp.size()) {
    report->violations.push_back({-1, -1, "recorded basis has the wrong size"});
    return;
  }
  const OptimalityCertificate cert = ComputeOptimalityCertificate(lcp, *result.basis);
  const CertificateSigns signs = ClassifyCertificate(cert);
  if (!signs.nonnegative) {
    report->violations.push_back({-1, -1, "basis certificate is negative near zero"});
    return;
  }
  if (result.certified && !(result.epsilon <= signs.threshold)) {
    report->violations.push_back(
        {-1, -1, "certificate signs are only proven up to " + ToString(signs.threshold)});
  }
  for (const Rational& delta : {result.epsilon, Rational(result.epsilon / 2)}) {
    const std::vector<Rational> values = cert.Values(delta);
    std::array<std::vector<Rational>, kNumPlayers> r_tilde;
    for (int p = 0; p < kNumPlayers; ++p) r_tilde[p].assign(lcp.layout.r_size(p), Rational(0));
    for (int i = 0; i < cert.basis.size(); ++i) {
      const LcpVariable& v = cert.basis.variables[i];
      if (values[i] < 0) {
        report->violations.push_back({-1, -1, "basis is infeasible at " + ToString(delta)});
        return;
      }
      if (v.kind != LcpVariable::kZ) continue;
      for (int p = 0; p < kNumPlayers; ++p) {
        const int begin = lcp.layout.r_begin(p);
        if (v.index >= begin && v.index < begin + lcp.layout.r_size(p)) {
          r_tilde[p][v.index - begin] = values[i];
        }
      }
    }
    CheckPerturbedAt(game, sf, lcp.r_inverse, r_tilde, delta, report);
  }
  CompareLimit(LimitFromCertificate(sf, lcp, cert), result, report);
}

void ReplayLp(const Game& game, const SequenceForm& sf, const EquilibriumResult& result,
              CheckReport* report) {
  const OffsetSequenceForm shifted = ApplyNegativeOffset(sf);
  std::array<PerturbedLp, kNumPlayers> programs;
  std::array<LpCertificate, kNumPlayers> certs;
  std::array<PolyMatrix, kNumPlayers> r_inverse;
  for (int p = 0; p < kNumPlayers; ++p) {
    programs[p] = BuildPerturbedLp(shifted.sf, p);
    certs[p] = CertifyLpBasis(programs[p], result.lp_bases[p]);
    r_inverse[p] = programs[p].r_inverse;
    if (!certs[p].optimal) {
      report->violations.push_back({-1, -1, "LP basis of player " + game.player_names()[p] +
                                                " is not optimal near zero"});
      return;
    }
    if (result.certified && !certs[p].CertifiedOn(result.epsilon)) {
      report->violations.push_back({-1, -1, "LP basis of player " + game.player_names()[p] +
                                                " is not certified up to epsilon"});
    }
  }
  for (const Rational& delta : {result.epsilon, Rational(result.epsilon / 2)}) {
    std::array<std::vector<Rational>, kNumPlayers> r_tilde;
    for (int p = 0; p < kNumPlayers; ++p) {
      const std::vector<Rational> x = certs[p].Values(programs[p].num_columns(), delta);
      r_tilde[p] = Slice(x, 0, programs[p].n_r);
    }
    CheckPerturbedAt(game, sf, r_inverse, r_tilde, delta, report);
  }
  CompareLimit(LimitFromLp(sf, programs, certs), result, report);
}

void TrembleTest(const Game& game, const EquilibriumResult& result, CheckReport* report) {
  const int nu = MaxBranching(game);
  if (nu == 0) return;
  Rational delta = result.epsilon;
  if (delta <= 0 || delta * nu >= 1) delta = Rational(1, 10 * nu);
  for (const Rational& d : {delta, Rational(delta / 2)}) {
    BehavioralProfile mixed = result.behavioral;
    for (auto& strategy : mixed) {
      for (auto& dist : strategy) {
        const Rational keep = 1 - d * static_cast<long>(dist.size());
        for (Rational& p : dist) p = keep * p + d;
      }
    }
    const CheckReport r = CheckPerturbedEquilibrium(game, mixed, d);
    for (const Violation& v : r.violations) {
      report->violations.push_back(
          {v.infoset, v.action, "with tremble " + ToString(d) + ": " + v.message});
    }
  }
}

}  // namespace

PlanLimit LimitOfPlan(const SequenceForm& sf, int player, const PolyMatrix& r_inverse,
                      const TransformedPlan& plan) {
  const PlayerSequences& ps = sf.players[player];
  const int n = ps.size();
  std::vector<EpsPoly> r(n);
  for (int q = 0; q < n; ++q) {
    for (int k = 0; k <= q; ++k) {
      if (r_inverse(q, k).is_zero() || plan.numerators[k].is_zero()) continue;
      r[q] += r_inverse(q, k) * plan.numerators[k];
    }
  }
  PlanLimit out;
  for (int q = 0; q < n; ++q) {
    out.realization.push_back(PolyFraction{r[q], plan.denominator}.Limit());
  }
  out.behavioral.resize(ps.num_infosets());
  for (int q = 1; q < n; ++q) {
    const Sequence& s = ps.sequences[q];
    const EpsPoly& parent = r[s.parent];
    std::vector<Rational>& dist = out.behavioral[s.local_infoset];
    if (parent.is_zero()) {
      dist.push_back(Rational(0));  // replaced by uniform below
      continue;
    }
    const int order = parent.order();
    if (r[q].is_zero() || r[q].order() > order) {
      dist.push_back(Rational(0));
    } else if (r[q].order() == order) {
      dist.push_back(r[q].coeff(order) / parent.coeff(order));
    } else {
      throw SolverError("behavioral ratio is unbounded as epsilon goes to zero");
    }
  }
  for (int k = 0; k < ps.num_infosets(); ++k) {
    if (r[ps.infoset_parent[k]].is_zero()) {
      for (Rational& p : out.behavioral[k]) {
        p = Rational(1) / static_cast<long>(out.behavioral[k].size());
      }
    }
  }
  return out;
}

std::array<TransformedPlan, kNumPlayers> TransformedPlans(const LcpInstance& lcp,
                                                          const OptimalityCertificate& cert) {
  std::array<TransformedPlan, kNumPlayers> out;
  for (int p = 0; p < kNumPlayers; ++p) {
    out[p].numerators.assign(lcp.layout.r_size(p), EpsPoly());
    out[p].denominator = cert.denominator;
  }
  for (int i = 0; i < cert.basis.size(); ++i) {
    const LcpVariable& v = cert.basis.variables[i];
    if (v.kind != LcpVariable::kZ) continue;
    for (int p = 0; p < kNumPlayers; ++p) {
      const int begin = lcp.layout.r_begin(p);
      if (v.index >= begin && v.index < begin + lcp.layout.r_size(p)) {
        out[p].numerators[v.index - begin] = cert.numerators[i];
      }
    }
  }
  return out;
}

EquilibriumResult ExtractLimit(const SequenceForm& sf, const LcpInstance& lcp,
                               const Basis& basis) {
  return LimitFromCertificate(sf, lcp, ComputeOptimalityCertificate(lcp, basis));
}

EquilibriumResult SolveEfpe(const Game& game, const SolveOptions& options) {
  const SequenceForm sf = BuildSequenceForm(game);
  const int nu = MaxBranching(game);
  const SolverPath path = ChoosePath(options.path, sf);
  const LcpInstance lcp = BuildLcp(sf);
  const NppCertificate npp = ComputeNpp(lcp, nu);

  Rational epsilon;
  std::string source;
  if (options.epsilon) {
    CheckEpsilon(*options.epsilon, nu);
    epsilon = *options.epsilon;
    source = "override";
  } else {
    if (npp.bits > options.eps_bits_cap) {
      throw SolverError("game too large for exact epsilon*: V* has " +
                        std::to_string(npp.bits) + " bits, cap is " +
                        std::to_string(options.eps_bits_cap));
    }
    epsilon = npp.epsilon_star;
    source = "npp";
  }

  for (int attempt = 0;; ++attempt) {
    Rational threshold;
    if (path == SolverPath::kLcp) {
      LemkeResult lemke = RunLemke(lcp, epsilon, options);
      const OptimalityCertificate cert = ComputeOptimalityCertificate(lcp, lemke.basis);
      const CertificateSigns signs = ClassifyCertificate(cert);
      if (signs.nonnegative && epsilon <= signs.threshold) {
        EquilibriumResult result = LimitFromCertificate(sf, lcp, cert);
        result.epsilon = epsilon;
        result.epsilon_source = source;
        result.certified = true;
        result.npp = npp;
        result.pivots = lemke.pivots;
        result.z = std::move(lemke.z);
        result.w = std::move(lemke.w);
        SelfVerify(game, result, options);
        return result;
      }
      threshold = signs.threshold;
    } else {
      const ZeroSumSolution zs = SolveZeroSum(sf, epsilon);
      std::array<LpCertificate, kNumPlayers> certs;
      bool ok = true;
      threshold = epsilon;
      for (int p = 0; p < kNumPlayers; ++p) {
        certs[p] = CertifyLpBasis(zs.programs[p], zs.solutions[p].basis);
        ok = ok && certs[p].CertifiedOn(epsilon);
        threshold = std::min(threshold, certs[p].threshold);
      }
      if (ok) {
        EquilibriumResult result = LimitFromLp(sf, zs.programs, certs);
        result.epsilon = epsilon;
        result.epsilon_source = source;
        result.certified = true;
        result.offset = zs.offset;
        result.npp = npp;
        result.pivots = zs.pivots;
        SelfVerify(game, result, options);
        return result;
      }
    }
    if (attempt == kMaxRefinements) {
      throw SolverError("no basis certified on (0, epsilon] after " +
                        std::to_string(kMaxRefinements) + " refinements");
    }
    epsilon = std::min(Rational(epsilon / 2), threshold);
    source = "refined";
  }
}

EquilibriumResult SolvePerturbed(const Game& game, const Rational& epsilon,
                                 const SolveOptions& options) {
  const SequenceForm sf = BuildSequenceForm(game);
  CheckEpsilon(epsilon, MaxBranching(game));
  EquilibriumResult result;
  result.kind = ResultKind::kPerturbedNe;
  result.epsilon = epsilon;
  result.epsilon_source = "given";
  result.path = ChoosePath(options.path, sf);
  if (result.path == SolverPath::kLcp) {
    const LcpInstance lcp = BuildLcp(sf);
    LemkeResult lemke = RunLemke(lcp, epsilon, options);
    for (int p = 0; p < kNumPlayers; ++p) {
      const std::vector<Rational> r_tilde =
          Slice(lemke.z, lcp.layout.r_begin(p), lcp.layout.r_size(p));
      result.realization[p] = MatVec(Evaluate(lcp.r_inverse[p], epsilon), r_tilde);
    }
    result.basis = lemke.basis;
    result.offset = lcp.offset;
    result.pivots = lemke.pivots;
    result.z = std::move(lemke.z);
    result.w = std::move(lemke.w);
  } else {
    const ZeroSumSolution zs = SolveZeroSum(sf, epsilon);
    result.realization = zs.plans;
    result.offset = zs.offset;
    result.pivots = zs.pivots;
    for (int p = 0; p < kNumPlayers; ++p) result.lp_bases[p] = zs.solutions[p].basis;
  }
  for (int p = 0; p < kNumPlayers; ++p) {
    result.behavioral[p] = RealizationToBehavioral(sf, p, result.realization[p]);
  }
  result.utilities = Utilities(sf, result.realization);
  SelfVerify(game, result, options);
  return result;
}

EquilibriumResult SolveNash(const Game& game, const SolveOptions& options) {
  const SequenceForm sf = BuildSequenceForm(game);
  EquilibriumResult result;
  result.kind = ResultKind::kNe;
  result.epsilon = 0;
  result.epsilon_source = "zero";
  if (options.path == PathChoice::kLp) {
    const ZeroSumSolution zs = SolveZeroSum(sf, Rational(0));
    result.path = SolverPath::kLp;
    result.realization = zs.plans;
    result.offset = zs.offset;
    result.pivots = zs.pivots;
    for (int p = 0; p < kNumPlayers; ++p) result.lp_bases[p] = zs.solutions[p].basis;
  } else {
    const LcpInstance lcp = BuildLcp(sf);
    LemkeResult lemke = RunLemke(lcp, Rational(0), options);
    for (int p = 0; p < kNumPlayers; ++p) {
      result.realization[p] = Slice(lemke.z, lcp.layout.r_begin(p), lcp.layout.r_size(p));
    }
    result.basis = lemke.basis;
    result.offset = lcp.offset;
    result.pivots = lemke.pivots;
    result.z = std::move(lemke.z);
    result.w = std::move(lemke.w);
  }
  for (int p = 0; p < kNumPlayers; ++p) {
    result.behavioral[p] = RealizationToBehavioral(sf, p, result.realization[p]);
  }
  result.utilities = Utilities(sf, result.realization);
  SelfVerify(game, result, options);
  return result;
}

CheckReport VerifyResult(const Game& game, const EquilibriumResult& result) {
  CheckReport report;
  const SequenceForm sf = BuildSequenceForm(game);
  for (int p = 0; p < kNumPlayers; ++p) {
    const std::string who = "player " + game.player_names()[p];
    if (!IsValidBehavioral(game, p, result.behavioral[p])) {
      report.violations.push_back({-1, -1, who + ": invalid behavioral strategy"});
    } else if (!IsRealizationPlan(sf, p, result.realization[p])) {
      report.violations.push_back({-1, -1, who + ": realization plan violates F r = f"});
    } else if (BehavioralToRealization(sf, p, result.behavioral[p]) != result.realization[p]) {
      report.violations.push_back(
          {-1, -1, who + ": realization plan and behavioral strategy disagree"});
    }
  }
  if (!report.ok()) return report;

  switch (result.kind) {
    case ResultKind::kNe:
      return CheckNash(game, result.behavioral);
    case ResultKind::kPerturbedNe:
      return CheckPerturbedEquilibrium(game, result.behavioral, result.epsilon);
    case ResultKind::kEfpeLimit:
      break;
  }
  report = CheckNash(game, result.behavioral);
  if (!report.ok()) return report;
  if (result.basis && result.epsilon > 0) {
    ReplayLcp(game, sf, result, &report);
  } else if (result.path == SolverPath::kLp && !result.lp_bases[0].empty() &&
             result.epsilon > 0) {
    ReplayLp(game, sf, result, &report);
  } else {
    TrembleTest(game, result, &report);
  }
  return report;
}

}  // namespace efpe
