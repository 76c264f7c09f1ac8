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

#ifndef EFPE_ERRORS_H_
#define EFPE_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace efpe {

// Malformed game text. `offset` is the byte position of the failure, or
// npos when the failure is not tied to a location.
class GameSyntaxError : public std::runtime_error {
 public:
  GameSyntaxError(const std::string& what, std::size_t offset)
      : std::runtime_error(what), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Well-formed text describing an invalid game (missing payoffs, inconsistent
// information sets, chance nodes, imperfect recall).
class GameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Failure inside a solver stage: ray termination, pivot budget, singular
// basis, an NPP bound that is too large to use.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace efpe

#endif  // EFPE_ERRORS_H_
