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

// Command-line front end: solve, solve-perturbed, solve-nash, inspect and
// verify.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "efpe/errors.h"
#include "efpe/game.h"
#include "efpe/game_io.h"
#include "efpe/lcp.h"
#include "efpe/limit.h"
#include "efpe/perturbation.h"
#include "efpe/poly_matrix.h"
#include "efpe/rational.h"
#include "efpe/result.h"
#include "efpe/sequence_form.h"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitSolver = 3;
constexpr int kExitVerify = 4;

struct Config {
  std::string game_path;
  std::string result_path;
  std::string epsilon;
  std::string output;
  std::int64_t max_pivots = std::int64_t{1} << 20;
  std::size_t eps_bits_cap = 1000000;
  bool trace = false;
  bool zero_sum = false;
  bool show_perturbation = false;
  bool show_lcp = false;
  bool show_npp = false;
};

// A usage or input problem that maps to the parse exit code.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

efpe::Rational ParseEpsilon(const std::string& text) {
  try {
    return efpe::ParseRational(text);
  } catch (const std::invalid_argument& e) {
    throw InputError("bad --epsilon '" + text + "': " + e.what());
  }
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteOutput(const Config& config, const std::string& text) {
  if (config.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(config.output, std::ios::binary);
  if (!out) throw InputError("cannot write " + config.output);
  out << text;
}

efpe::SolveOptions Options(const Config& config) {
  efpe::SolveOptions options;
  options.max_pivots = config.max_pivots;
  options.eps_bits_cap = config.eps_bits_cap;
  if (!config.epsilon.empty()) options.epsilon = ParseEpsilon(config.epsilon);
  if (config.zero_sum) options.path = efpe::PathChoice::kLp;
  if (config.trace) options.trace = &std::cerr;
  return options;
}

std::string SequenceLabel(const efpe::Game& game, const efpe::PlayerSequences& seqs, int q) {
  const std::vector<std::string> actions = efpe::SequenceActions(game, seqs, q);
  if (actions.empty()) return "∅";
  std::string out;
  for (const std::string& a : actions) out += (out.empty() ? "" : " ") + a;
  return out;
}

template <typename T, typename F>
void PrintMatrix(std::ostream& os, const efpe::Matrix<T>& m, F&& format) {
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  std::vector<std::size_t> width(m.cols(), 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      cells[r][c] = format(m(r, c));
      // Column widths count code points so ε lines up.
      std::size_t len = 0;
      for (unsigned char ch : cells[r][c]) len += (ch & 0xC0) != 0x80;
      width[c] = std::max(width[c], len);
    }
  }
  for (int r = 0; r < m.rows(); ++r) {
    os << "  [";
    for (int c = 0; c < m.cols(); ++c) {
      std::size_t len = 0;
      for (unsigned char ch : cells[r][c]) len += (ch & 0xC0) != 0x80;
      os << (c ? "  " : "") << std::string(width[c] - len, ' ') << cells[r][c];
    }
    os << "]\n";
  }
}

std::string PolyText(const efpe::EpsPoly& p) { return p.ToString(); }
std::string RationalText(const efpe::Rational& v) { return efpe::ToString(v); }

int RunInspect(const Config& config) {
  const efpe::Game game = efpe::LoadGame(config.game_path);
  const efpe::SequenceForm sf = efpe::BuildSequenceForm(game);
  std::ostream& os = std::cout;
  const bool all = !config.show_perturbation && !config.show_lcp && !config.show_npp;
  if (all) {
    os << "nodes: " << game.num_nodes() << ", leaves: " << game.num_leaves()
       << ", information sets: " << game.num_infosets()
       << ", max branching: " << efpe::MaxBranching(game) << "\n";
    for (int p = 0; p < efpe::kNumPlayers; ++p) {
      const efpe::PlayerSequences& ps = sf.players[p];
      os << "player " << game.player_names()[p] << ": " << ps.size() << " sequences, "
         << ps.num_infosets() << " information sets\n";
      for (int q = 0; q < ps.size(); ++q) {
        os << "  q" << q << ": " << SequenceLabel(game, ps, q) << "\n";
      }
      os << "  F =\n";
      PrintMatrix(os, ps.constraints, RationalText);
    }
    for (int p = 0; p < efpe::kNumPlayers; ++p) {
      os << "U" << p + 1 << " =\n";
      PrintMatrix(os, sf.payoff[p], RationalText);
    }
  }
  if (config.show_perturbation) {
    for (int p = 0; p < efpe::kNumPlayers; ++p) {
      const efpe::PlayerSequences& ps = sf.players[p];
      os << "R" << p + 1 << "(ε) =\n";
      PrintMatrix(os, efpe::BuildPerturbationMatrix(ps), PolyText);
      os << "R" << p + 1 << "(ε)^-1 =\n";
      PrintMatrix(os, efpe::InvertPerturbationMatrix(ps), PolyText);
    }
  }
  if (config.show_lcp || config.show_npp) {
    const efpe::LcpInstance lcp = efpe::BuildLcp(sf);
    if (config.show_lcp) {
      os << "offset: " << efpe::ToString(lcp.offset) << "\n";
      os << "dimension: " << lcp.size() << "\n";
      os << "layout:";
      for (int i = 0; i < lcp.size(); ++i) os << " " << lcp.layout.Name(i);
      os << "\nM(ε) =\n";
      PrintMatrix(os, lcp.M, PolyText);
      os << "b =";
      for (const efpe::Rational& v : lcp.b) os << " " << efpe::ToString(v);
      os << "\n";
      const std::vector<std::string> issues = efpe::CheckLemkePreconditions(lcp);
      os << "termination conditions: " << (issues.empty() ? "hold" : "violated") << "\n";
      for (const std::string& issue : issues) os << "  " << issue << "\n";
    }
    if (config.show_npp) {
      const efpe::NppCertificate c = efpe::ComputeNpp(lcp, efpe::MaxBranching(game));
      os << "V_B = " << efpe::ToString(c.v_b) << "\n";
      os << "m = " << c.m << "\n";
      os << "n = " << c.n << "\n";
      os << "V_D = " << efpe::ToString(c.v_d) << "\n";
      os << "V_N = " << efpe::ToString(c.v_n) << "\n";
      os << "V* = " << efpe::ToString(c.v_star) << "\n";
      os << "epsilon* = " << efpe::ToString(c.epsilon_star) << "\n";
      os << "bits(V*) = " << c.bits << "\n";
    }
  }
  return 0;
}

int RunSolve(const std::string& command, const Config& config) {
  const efpe::Game game = efpe::LoadGame(config.game_path);
  efpe::SolveOptions options = Options(config);
  if (options.epsilon) {
    const int nu = efpe::MaxBranching(game);
    if (*options.epsilon <= 0 || (nu > 0 && *options.epsilon * nu > 1)) {
      throw InputError("--epsilon " + config.epsilon + " is outside (0, 1/" +
                       std::to_string(nu) + "]");
    }
  }
  efpe::EquilibriumResult result;
  if (command == "solve") {
    result = efpe::SolveEfpe(game, options);
  } else if (command == "solve-perturbed") {
    if (!options.epsilon) throw InputError("solve-perturbed needs --epsilon");
    const efpe::Rational epsilon = *options.epsilon;
    result = efpe::SolvePerturbed(game, epsilon, options);
  } else {
    result = efpe::SolveNash(game, options);
  }
  WriteOutput(config, efpe::ResultToJson(game, efpe::BuildSequenceForm(game), result));
  return 0;
}

int RunVerify(const Config& config) {
  const efpe::Game game = efpe::LoadGame(config.game_path);
  const efpe::SequenceForm sf = efpe::BuildSequenceForm(game);
  const efpe::EquilibriumResult result =
      efpe::ResultFromJson(game, sf, ReadFile(config.result_path));
  const efpe::CheckReport report = efpe::VerifyResult(game, result);
  if (report.ok()) {
    std::cout << "ok: " << efpe::KindName(result.kind) << " result verified\n";
    return 0;
  }
  std::cout << "verification failed:\n" << report.Summary() << "\n";
  return kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extensive-form perfect equilibria via perturbed sequence-form LCPs"};
  app.require_subcommand(1);
  Config config;

  auto add_solver_flags = [&config](CLI::App* cmd) {
    cmd->add_option("game", config.game_path, "game file")->required();
    cmd->add_option("--max-pivots", config.max_pivots, "pivot budget per Lemke run");
    cmd->add_option("--eps-bits-cap", config.eps_bits_cap,
                    "refuse games whose V* exceeds this many bits");
    cmd->add_flag("--trace", config.trace, "print one line per pivot to stderr");
    cmd->add_option("-o,--output", config.output, "write the result JSON here");
    cmd->add_flag("--zero-sum", config.zero_sum, "force the LP route (zero-sum games)");
  };

  CLI::App* solve = app.add_subcommand("solve", "EFPE as the limit of perturbed equilibria");
  add_solver_flags(solve);
  solve->add_option("--epsilon", config.epsilon, "pivot at this epsilon instead of epsilon*");

  CLI::App* perturbed =
      app.add_subcommand("solve-perturbed", "Nash equilibrium with every action at least epsilon");
  add_solver_flags(perturbed);
  perturbed->add_option("--epsilon", config.epsilon, "the floor, 0 < epsilon <= 1/nu")
      ->required();

  CLI::App* nash = app.add_subcommand("solve-nash", "Nash equilibrium (epsilon = 0)");
  add_solver_flags(nash);

  CLI::App* inspect = app.add_subcommand("inspect", "print sequence form, R(ε), M(ε), ε*");
  inspect->add_option("game", config.game_path, "game file")->required();
  inspect->add_flag("--perturbation", config.show_perturbation, "print R(ε) and R(ε)^-1");
  inspect->add_flag("--lcp", config.show_lcp, "print M(ε), b and the layout");
  inspect->add_flag("--npp", config.show_npp, "print V_B, m, V_D, V* and ε*");

  CLI::App* verify = app.add_subcommand("verify", "check a result document against a game");
  verify->add_option("game", config.game_path, "game file")->required();
  verify->add_option("result", config.result_path, "result JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*inspect) return RunInspect(config);
    if (*verify) return RunVerify(config);
    const std::string command = app.get_subcommands().front()->get_name();
    return RunSolve(command, config);
  } catch (const efpe::GameSyntaxError& e) {
    std::cerr << "error: " << e.what() << " (at byte " << e.offset() << ")\n";
    return kExitParse;
  } catch (const efpe::GameError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const efpe::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const efpe::UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
