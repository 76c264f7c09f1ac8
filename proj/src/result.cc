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

#include "efpe/result.h"

#include <stdexcept>
#include <utility>

#include <json.hpp>

#include "efpe/errors.h"

namespace efpe {

using nlohmann::json;
using nlohmann::ordered_json;

std::string KindName(ResultKind kind) {
  switch (kind) {
    case ResultKind::kEfpeLimit: return "efpe-limit";
    case ResultKind::kPerturbedNe: return "perturbed-ne";
    case ResultKind::kNe: return "ne";
  }
  return "";
}

std::string PathName(SolverPath path) {
  return path == SolverPath::kLp ? "lp" : "lcp";
}

std::string ResultToJson(const Game& game, const SequenceForm& sf,
                         const EquilibriumResult& result) {
  ordered_json out;
  out["format"] = "efpe-result";
  out["version"] = 1;
  out["kind"] = KindName(result.kind);
  out["path"] = PathName(result.path);
  out["epsilon"] = ToString(result.epsilon);
  out["epsilon_source"] = result.epsilon_source;
  out["certified"] = result.certified;
  out["offset"] = ToString(result.offset);
  out["utilities"] = {ToString(result.utilities[0]), ToString(result.utilities[1])};
  out["pivots"] = result.pivots;
  if (result.npp) {
    const NppCertificate& c = *result.npp;
    ordered_json npp;
    npp["V_B"] = ToString(c.v_b);
    npp["m"] = c.m;
    npp["n"] = c.n;
    npp["V_D"] = ToString(c.v_d);
    npp["V_N"] = ToString(c.v_n);
    npp["V_star"] = ToString(c.v_star);
    npp["epsilon_star"] = ToString(c.epsilon_star);
    npp["bits"] = c.bits;
    out["npp"] = std::move(npp);
  }
  if (result.basis) {
    ordered_json basis = ordered_json::array();
    for (const LcpVariable& v : result.basis->variables) basis.push_back(v.ToString());
    out["basis"] = std::move(basis);
  }
  if (result.path == SolverPath::kLp && !result.lp_bases[0].empty()) {
    out["lp_bases"] = {result.lp_bases[0], result.lp_bases[1]};
  }
  ordered_json strategies = ordered_json::array();
  for (int p = 0; p < kNumPlayers; ++p) {
    ordered_json s;
    s["player"] = game.player_names()[p];
    ordered_json behavioral = ordered_json::object();
    for (int g : game.player_infosets(p)) {
      const InfoSet& h = game.infoset(g);
      ordered_json dist = ordered_json::object();
      for (int a = 0; a < static_cast<int>(h.actions.size()); ++a) {
        dist[h.actions[a]] = ToString(result.behavioral[p][h.local_index][a]);
      }
      behavioral[h.id] = std::move(dist);
    }
    s["behavioral"] = std::move(behavioral);
    ordered_json plan = ordered_json::array();
    for (int q = 0; q < sf.players[p].size(); ++q) {
      ordered_json entry;
      entry["sequence"] = SequenceActions(game, sf.players[p], q);
      entry["probability"] = ToString(result.realization[p][q]);
      plan.push_back(std::move(entry));
    }
    s["realization"] = std::move(plan);
    strategies.push_back(std::move(s));
  }
  out["strategies"] = std::move(strategies);
  return out.dump(2) + "\n";
}

namespace {

Rational ReadRational(const json& value, const std::string& path) {
  try {
    if (value.is_string()) return ParseRational(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<long>());
  } catch (const std::invalid_argument& e) {
    throw GameError(path + ": " + e.what());
  }
  throw GameError(path + ": expected a fraction string");
}

LcpVariable ReadVariable(const std::string& token, const std::string& path) {
  if (token == "z*") return LcpVariable::Z0();
  if (token.size() >= 2 && (token[0] == 'w' || token[0] == 'z')) {
    try {
      std::size_t used = 0;
      const int index = std::stoi(token.substr(1), &used);
      if (used == token.size() - 1 && index >= 0) {
        return token[0] == 'w' ? LcpVariable::W(index) : LcpVariable::Z(index);
      }
    } catch (const std::exception&) {
    }
  }
  throw GameError(path + ": bad basis variable '" + token + "'");
}

}  // namespace

EquilibriumResult ResultFromJson(const Game& game, const SequenceForm& sf,
                                 const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GameSyntaxError(std::string("result is not valid JSON: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw GameError("result: expected an object");
  EquilibriumResult r;
  const std::string kind = doc.value("kind", "");
  if (kind == "efpe-limit") {
    r.kind = ResultKind::kEfpeLimit;
  } else if (kind == "perturbed-ne") {
    r.kind = ResultKind::kPerturbedNe;
  } else if (kind == "ne") {
    r.kind = ResultKind::kNe;
  } else {
    throw GameError("kind: unknown result kind '" + kind + "'");
  }
  r.path = doc.value("path", "lcp") == "lp" ? SolverPath::kLp : SolverPath::kLcp;
  if (doc.contains("epsilon")) r.epsilon = ReadRational(doc["epsilon"], "epsilon");
  r.epsilon_source = doc.value("epsilon_source", "");
  r.certified = doc.value("certified", false);
  if (doc.contains("offset")) r.offset = ReadRational(doc["offset"], "offset");
  if (doc.contains("basis")) {
    Basis basis;
    for (const json& v : doc["basis"]) {
      if (!v.is_string()) throw GameError("basis: expected variable names");
      basis.variables.push_back(ReadVariable(v.get<std::string>(), "basis"));
    }
    r.basis = std::move(basis);
  }
  if (doc.contains("lp_bases")) {
    const json& bases = doc["lp_bases"];
    if (!bases.is_array() || bases.size() != kNumPlayers) {
      throw GameError("lp_bases: expected one list per player");
    }
    for (int p = 0; p < kNumPlayers; ++p) r.lp_bases[p] = bases[p].get<std::vector<int>>();
  }

  const json& strategies = doc.contains("strategies") ? doc["strategies"] : json();
  if (!strategies.is_array() || strategies.size() != kNumPlayers) {
    throw GameError("strategies: expected one entry per player");
  }
  for (int p = 0; p < kNumPlayers; ++p) {
    const std::string base = "strategies[" + std::to_string(p) + "]";
    const json& s = strategies[p];
    if (!s.contains("behavioral") || !s["behavioral"].is_object()) {
      throw GameError(base + ".behavioral: missing");
    }
    const json& behavioral = s["behavioral"];
    r.behavioral[p].resize(game.player_infosets(p).size());
    for (int g : game.player_infosets(p)) {
      const InfoSet& h = game.infoset(g);
      const std::string path = base + ".behavioral." + h.id;
      if (!behavioral.contains(h.id)) throw GameError(path + ": missing");
      const json& dist = behavioral[h.id];
      std::vector<Rational>& out = r.behavioral[p][h.local_index];
      for (const std::string& action : h.actions) {
        if (!dist.contains(action)) throw GameError(path + "." + action + ": missing");
        out.push_back(ReadRational(dist[action], path + "." + action));
      }
    }
    if (s.contains("realization")) {
      const json& plan = s["realization"];
      if (!plan.is_array() || static_cast<int>(plan.size()) != sf.players[p].size()) {
        throw GameError(base + ".realization: expected one entry per sequence");
      }
      for (int q = 0; q < sf.players[p].size(); ++q) {
        const std::string path = base + ".realization[" + std::to_string(q) + "]";
        if (!plan[q].contains("probability")) throw GameError(path + ": missing probability");
        r.realization[p].push_back(ReadRational(plan[q]["probability"], path));
      }
    } else if (IsValidBehavioral(game, p, r.behavioral[p])) {
      r.realization[p] = BehavioralToRealization(sf, p, r.behavioral[p]);
    }
  }
  if (doc.contains("utilities") && doc["utilities"].is_array() &&
      doc["utilities"].size() == kNumPlayers) {
    for (int p = 0; p < kNumPlayers; ++p) {
      r.utilities[p] = ReadRational(doc["utilities"][p], "utilities");
    }
  }
  return r;
}

}  // namespace efpe
