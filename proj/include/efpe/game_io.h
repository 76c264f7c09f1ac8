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

#ifndef EFPE_GAME_IO_H_
#define EFPE_GAME_IO_H_

#include <string>
#include <string_view>

#include "efpe/game.h"

namespace efpe {

// Game file format, version 1. A JSON document:
//
//   {
//     "version": 1,                      // optional, must be 1
//     "players": ["Alice", "Bob"],
//     "root": <node>
//   }
//
//   <node> := {"kind": "decision", "player": 1 | 2, "infoset": "<id>",
//              "actions": [{"name": "<action>", "child": <node>}, ...]}
//           | {"kind": "terminal", "payoffs": [<payoff>, <payoff>]}
//
// Payoffs are strings holding integers, fractions ("3/7") or decimals
// ("0.25", "1e-3"), or JSON numbers. Decimal values convert exactly; a JSON
// floating-point number is read through its shortest round-trip decimal
// spelling. Information set ids are global strings; every node that names
// an id belongs to that set. Chance nodes are rejected.
//
// Throws GameSyntaxError for malformed JSON and GameError for semantic
// problems, including imperfect recall.
Game ParseGame(std::string_view text);

// Reads and parses a game file.
Game LoadGame(const std::string& path);

// Writes a game in the format above; ParseGame(SerializeGame(g)) == g.
std::string SerializeGame(const Game& game);

}  // namespace efpe

#endif  // EFPE_GAME_IO_H_
