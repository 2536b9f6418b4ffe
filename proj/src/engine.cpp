#include "wise/engine.hpp"

namespace wise {

SymStream::SymStream(std::vector<SymState> worklist, const EngineOptions& options)
    : worklist_(worklist.begin(), worklist.end()), options_(options) {}

std::optional<SymState> SymStream::next() {
  if (worklist_.empty()) return std::nullopt;
  SymState head = std::move(worklist_.front());
  worklist_.pop_front();
  std::vector<SymState> successors = expand(head);
  if (options_.prune) {
    std::vector<SymState> kept;
    for (SymState& s : successors) {
      // Unknown states are kept: only proven-empty paths may be dropped.
      if (!is_sat(*s.path, options_.solver_budget).unsat()) kept.push_back(std::move(s));
    }
    successors = std::move(kept);
  }
  if (options_.strategy == Strategy::Bfs) {
    for (SymState& s : successors) worklist_.push_back(std::move(s));
  } else {
    for (auto it = successors.rbegin(); it != successors.rend(); ++it)
      worklist_.push_front(std::move(*it));
  }
  return head;
}

Status display(const std::optional<SymState>& item) {
  if (!item) return Status::finished();
  if (is_stuck_sym(*item)) return Status::bug_found(*item);
  return Status::pending();
}

SymStream run(std::vector<SymState> worklist, Strategy strategy) {
  EngineOptions options;
  options.strategy = strategy;
  return SymStream(std::move(worklist), options);
}

StatusStream::StatusStream(StmtPtr p, const EngineOptions& options)
    : states_({initial_state(std::move(p), options.initial_path)}, options) {}

StatusStream find_bugs(StmtPtr p, const EngineOptions& options) {
  return StatusStream(std::move(p), options);
}

BugAnswer has_bug(const StmtPtr& p, long step_budget, long solver_budget,
                  const EngineOptions& options) {
  StatusStream stream = find_bugs(p, options);
  bool saw_unknown = false;
  for (long i = 0; i < step_budget; ++i) {
    Status status = stream.next();
    switch (status.kind) {
      case Status::Kind::Finished:
        return {saw_unknown ? BugAnswer::Verdict::Unknown : BugAnswer::Verdict::No,
                std::nullopt, std::nullopt};
      case Status::Kind::Pending: break;
      case Status::Kind::BugFound: {
        const SymState& state = *status.state;
        SatResult sat = is_sat(*state.path, solver_budget);
        if (sat.unknown()) {
          saw_unknown = true;
          break;
        }
        if (sat.unsat()) break;
        // Relative soundness, executable form: the model must replay to a
        // stuck concrete state.
        ExecOutcome replay = exec(ConcState{sat.model, p}, step_budget);
        if (replay.kind != ExecOutcome::Kind::StuckAt) throw ReplayMismatch();
        return {BugAnswer::Verdict::Yes, state, std::move(sat.model)};
      }
    }
  }
  return {BugAnswer::Verdict::Unknown, std::nullopt, std::nullopt};
}

BexprPtr bounds_condition(const std::vector<VarRange>& box) {
  BexprPtr out = tt();
  for (const VarRange& r : box) {
    BexprPtr range = conj(cmp(CmpOp::Le, lit(r.lo), var_ref(r.var)),
                          cmp(CmpOp::Le, var_ref(r.var), lit(r.hi)));
    out = conj(std::move(out), std::move(range));
  }
  return out;
}

}  // namespace wise
