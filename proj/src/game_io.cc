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

#include "efpe/game_io.h"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "efpe/errors.h"
#include "json.hpp"

namespace efpe {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

constexpr int kFormatVersion = 1;

[[noreturn]] void Fail(const std::string& path, const std::string& message) {
  throw GameError(path + ": " + message);
}

Rational PayoffFromJson(const json& value, const std::string& path) {
  try {
    if (value.is_string()) return ParseRational(value.get<std::string>());
    if (value.is_number_integer()) {
      return ParseRational(value.dump());
    }
    if (value.is_number_float()) {
      double d = value.get<double>();
      char buf[64];
      auto res = std::to_chars(buf, buf + sizeof(buf), d);
      return ParseRational(std::string_view(buf, res.ptr - buf));
    }
  } catch (const std::invalid_argument& e) {
    Fail(path, e.what());
  }
  Fail(path, "payoff must be a string or a number");
}

const json& Field(const json& object, const char* key, const std::string& path) {
  auto it = object.find(key);
  if (it == object.end()) Fail(path, std::string("missing field '") + key + "'");
  return *it;
}

int ParseNode(const json& value, const std::string& path, GameBuilder& builder) {
  if (!value.is_object()) Fail(path, "node must be an object");
  const json& kind = Field(value, "kind", path);
  if (!kind.is_string()) Fail(path, "'kind' must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "terminal") {
    auto it = value.find("payoffs");
    if (it == value.end()) Fail(path, "terminal node is missing its payoffs");
    if (!it->is_array() || it->size() != kNumPlayers) {
      Fail(path + ".payoffs", "expected an array of two payoffs");
    }
    return builder.Terminal(PayoffFromJson((*it)[0], path + ".payoffs[0]"),
                            PayoffFromJson((*it)[1], path + ".payoffs[1]"));
  }
  if (k == "chance") Fail(path, "chance nodes are not supported");
  if (k != "decision") Fail(path, "unknown node kind '" + k + "'");

  const json& player = Field(value, "player", path);
  if (!player.is_number_integer() || player.get<int>() < 1 || player.get<int>() > 2) {
    Fail(path + ".player", "player must be 1 or 2");
  }
  const json& infoset = Field(value, "infoset", path);
  if (!infoset.is_string() || infoset.get<std::string>().empty()) {
    Fail(path + ".infoset", "information set id must be a non-empty string");
  }
  const json& actions = Field(value, "actions", path);
  if (!actions.is_array() || actions.empty()) {
    Fail(path + ".actions", "expected a non-empty array of actions");
  }
  std::vector<std::string> names;
  std::vector<int> children;
  for (std::size_t a = 0; a < actions.size(); ++a) {
    const std::string apath = path + ".actions[" + std::to_string(a) + "]";
    const json& action = actions[a];
    if (!action.is_object()) Fail(apath, "action must be an object");
    const json& name = Field(action, "name", apath);
    if (!name.is_string() || name.get<std::string>().empty()) {
      Fail(apath + ".name", "action name must be a non-empty string");
    }
    names.push_back(name.get<std::string>());
    children.push_back(ParseNode(Field(action, "child", apath), apath + ".child", builder));
  }
  try {
    return builder.Decision(player.get<int>() - 1, infoset.get<std::string>(),
                            std::move(names), std::move(children));
  } catch (const GameError& e) {
    Fail(path, e.what());
  }
}

ordered_json NodeToJson(const Game& game, int index) {
  const Node& node = game.node(index);
  ordered_json out;
  if (node.kind == NodeKind::kTerminal) {
    out["kind"] = "terminal";
    out["payoffs"] = ordered_json::array(
        {ToString(node.payoffs[0]), ToString(node.payoffs[1])});
    return out;
  }
  const InfoSet& h = game.infoset(node.infoset);
  out["kind"] = "decision";
  out["player"] = node.player + 1;
  out["infoset"] = h.id;
  ordered_json actions = ordered_json::array();
  for (std::size_t a = 0; a < h.actions.size(); ++a) {
    ordered_json action;
    action["name"] = h.actions[a];
    action["child"] = NodeToJson(game, node.children[a]);
    actions.push_back(std::move(action));
  }
  out["actions"] = std::move(actions);
  return out;
}

}  // namespace

Game ParseGame(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw GameSyntaxError(std::string("game file syntax error: ") + e.what(), e.byte);
  }
  if (!doc.is_object()) throw GameError("game file must be a JSON object");
  if (auto it = doc.find("version"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<int>() != kFormatVersion) {
      throw GameError("unsupported game file version " + it->dump());
    }
  }
  const json& players = Field(doc, "players", "game");
  if (!players.is_array() || players.size() != kNumPlayers ||
      !players[0].is_string() || !players[1].is_string()) {
    throw GameError("game.players: expected an array of two player names");
  }
  GameBuilder builder;
  builder.SetPlayerNames(players[0].get<std::string>(), players[1].get<std::string>());
  int root = ParseNode(Field(doc, "root", "game"), "root", builder);
  Game game = builder.Build(root);
  RecallReport recall = ValidatePerfectRecall(game);
  if (!recall.perfect_recall) {
    throw GameError("perfect recall violated: " + recall.diagnostics.front());
  }
  return game;
}

Game LoadGame(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw GameError("cannot open game file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseGame(buffer.str());
}

std::string SerializeGame(const Game& game) {
  ordered_json doc;
  doc["version"] = kFormatVersion;
  doc["players"] = ordered_json::array({game.player_names()[0], game.player_names()[1]});
  doc["root"] = NodeToJson(game, game.root());
  return doc.dump(2) + "\n";
}

}  // namespace efpe
