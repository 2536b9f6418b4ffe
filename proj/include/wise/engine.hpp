#pragma once

#include <deque>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wise/solver.hpp"
#include "wise/symbolic.hpp"

namespace wise {

enum class Strategy { Bfs, Dfs };

struct EngineOptions {
  Strategy strategy = Strategy::Bfs;
  bool prune = false;                         // drop states with Unsat path conditions
  long solver_budget = kDefaultSolverBudget;  // used when pruning
  BexprPtr initial_path = tt();               // input-domain restriction
};

/// Pull-based stream of reachable symbolic states. Yields the worklist
/// head and enqueues its successors; once the worklist drains, every
/// further pull yields nullopt. Single-consumer.
class SymStream {
 public:
  SymStream(std::vector<SymState> worklist, const EngineOptions& options = {});

  std::optional<SymState> next();

  /// Worklist length before the next pull (test instrumentation).
  std::size_t pending() const { return worklist_.size(); }

 private:
  std::deque<SymState> worklist_;
  EngineOptions options_;
};

struct Status {
  enum class Kind { Pending, Finished, BugFound };
  Kind kind;
  std::optional<SymState> state;  // set iff kind == BugFound

  static Status pending() { return {Kind::Pending, std::nullopt}; }
  static Status finished() { return {Kind::Finished, std::nullopt}; }
  static Status bug_found(SymState s) { return {Kind::BugFound, std::move(s)}; }
};

/// Fig-style status conversion: absent -> Finished, stuck -> BugFound,
/// otherwise Pending.
Status display(const std::optional<SymState>& item);

SymStream run(std::vector<SymState> worklist, Strategy strategy = Strategy::Bfs);

/// display mapped pointwise over run([<initial_path, id, p>]).
class StatusStream {
 public:
  StatusStream(StmtPtr p, const EngineOptions& options = {});

  Status next() { return display(states_.next()); }
  std::size_t pending() const { return states_.pending(); }

 private:
  SymStream states_;
};

StatusStream find_bugs(StmtPtr p, const EngineOptions& options = {});

/// Raised when a Sat-confirmed bug fails to replay concretely; this is a
/// defect signal, never an expected outcome.
class ReplayMismatch : public std::logic_error {
 public:
  ReplayMismatch() : std::logic_error("confirmed bug did not replay to a stuck state") {}
};

struct BugAnswer {
  enum class Verdict { Yes, No, Unknown };
  Verdict verdict;
  std::optional<SymState> state;  // set on Yes
  std::optional<Env> model;       // set on Yes, validated and replayed
};

/// Budgeted YES/NO/UNKNOWN oracle over the status stream. A YES is
/// re-validated by concrete replay from the model. Throws ReplayMismatch
/// if the replay does not get stuck.
BugAnswer has_bug(const StmtPtr& p, long step_budget, long solver_budget,
                  const EngineOptions& options = {});

struct VarRange {
  std::string var;
  Int lo, hi;
};

/// lo <= x and x <= hi for every range, conjoined left to right.
BexprPtr bounds_condition(const std::vector<VarRange>& box);

}  // namespace wise
