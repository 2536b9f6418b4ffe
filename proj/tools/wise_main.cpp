#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "wise/corpus.hpp"
#include "wise/engine.hpp"
#include "wise/parser.hpp"
#include "wise/pretty.hpp"
#include "wise/solver.hpp"

namespace {

constexpr int kExitSafe = 0;
constexpr int kExitBug = 1;
constexpr int kExitParseError = 2;
constexpr int kExitUnknown = 3;
constexpr int kExitIoError = 4;
constexpr int kExitInternal = 70;

wise::VarRange parse_domain(const std::string& spec) {
  const auto eq = spec.find('=');
  const auto dots = spec.find("..", eq == std::string::npos ? 0 : eq);
  if (eq == std::string::npos || dots == std::string::npos)
    throw CLI::ValidationError("--domain expects VAR=LO..HI");
  wise::VarRange range;
  range.var = spec.substr(0, eq);
  try {
    range.lo = wise::Int(spec.substr(eq + 1, dots - eq - 1));
    range.hi = wise::Int(spec.substr(dots + 2));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--domain bounds must be integers");
  }
  if (range.lo > range.hi) throw CLI::ValidationError("--domain requires LO <= HI");
  return range;
}

std::string model_text(const wise::Env& model) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, value] : model.entries()) {
    if (!first) os << ",";
    os << name << "=" << value;
    first = false;
  }
  return os.str();
}

struct CheckConfig {
  std::string input_path;
  long max_steps = 10000;
  bool depth_first = false;
  bool prune = false;
  bool verbose = false;
  std::string emit_smt_dir;
  std::vector<std::string> domains;
  long solver_budget = wise::kDefaultSolverBudget;
};

int run_check(const CheckConfig& config) {
  std::ifstream in(config.input_path);
  if (!in) {
    std::cerr << "error: cannot read " << config.input_path << "\n";
    return kExitIoError;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();

  wise::StmtPtr program;
  try {
    program = wise::parse_program(buffer.str());
  } catch (const wise::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitParseError;
  }

  std::vector<wise::VarRange> box;
  for (const std::string& spec : config.domains) box.push_back(parse_domain(spec));

  wise::EngineOptions options;
  options.strategy = config.depth_first ? wise::Strategy::Dfs : wise::Strategy::Bfs;
  options.prune = config.prune;
  options.solver_budget = config.solver_budget;
  options.initial_path = wise::bounds_condition(box);

  if (!config.emit_smt_dir.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(config.emit_smt_dir, ec);
    if (ec) {
      std::cerr << "error: cannot create " << config.emit_smt_dir << "\n";
      return kExitIoError;
    }
  }

  wise::StatusStream stream = wise::find_bugs(program, options);
  long confirmed = 0;
  long emitted = 0;
  bool finished = false;
  bool saw_unknown = false;
  for (long i = 0; i < config.max_steps; ++i) {
    wise::Status status = stream.next();
    if (status.kind == wise::Status::Kind::Finished) {
      finished = true;
      break;
    }
    if (status.kind == wise::Status::Kind::Pending) {
      if (config.verbose) std::cout << "# pending item=" << i << "\n";
      continue;
    }
    const wise::SymState& state = *status.state;
    if (!config.emit_smt_dir.empty()) {
      const auto path = std::filesystem::path(config.emit_smt_dir) /
                        ("bug_" + std::to_string(emitted++) + ".smt2");
      std::ofstream smt(path);
      if (!smt) {
        std::cerr << "error: cannot write " << path.string() << "\n";
        return kExitIoError;
      }
      smt << wise::emit_smtlib(*state.path);
    }
    const wise::SatResult sat = wise::is_sat(*state.path, config.solver_budget);
    if (sat.unknown()) {
      saw_unknown = true;
      continue;
    }
    if (sat.unsat()) continue;
    const wise::ExecOutcome replay =
        wise::exec(wise::ConcState{sat.model, program}, config.max_steps);
    if (replay.kind != wise::ExecOutcome::Kind::StuckAt) throw wise::ReplayMismatch();
    std::cout << "BUG pc=" << wise::pretty(state.pc) << " path=" << wise::pretty(state.path)
              << " model=" << model_text(sat.model) << "\n";
    ++confirmed;
  }

  if (confirmed > 0) {
    std::cout << "BUG FOUND (" << confirmed << ")\n";
    return kExitBug;
  }
  if (finished && !saw_unknown) {
    std::cout << "SAFE\n";
    return kExitSafe;
  }
  std::cout << "UNKNOWN\n";
  return kExitUnknown;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wise - a symbolic-execution bug finder for IMP"};
  app.require_subcommand(1);

  CheckConfig config;
  if (const char* budget = std::getenv("WISE_SOLVER_BUDGET"))
    config.solver_budget = std::strtol(budget, nullptr, 10);

  CLI::App* check = app.add_subcommand("check", "symbolically execute an IMP file");
  check->add_option("file", config.input_path, "IMP source file")->required();
  check->add_option("--max-steps", config.max_steps, "stream item budget")
      ->check(CLI::PositiveNumber);
  check->add_flag("--depth-first", config.depth_first, "use DFS path selection");
  check->add_flag("--prune", config.prune, "drop unsatisfiable branches");
  check->add_option("--emit-smt", config.emit_smt_dir, "write bug_<k>.smt2 files here");
  check->add_option("--domain", config.domains, "restrict an input, VAR=LO..HI");
  check->add_flag("--verbose", config.verbose, "print progress lines");

  CLI11_PARSE(app, argc, argv);

  try {
    return run_check(config);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
