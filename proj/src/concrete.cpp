#include "wise/concrete.hpp"

namespace wise {

Int eval_aexpr(const Aexpr& e, const Env& v) {
  if (const auto* l = std::get_if<IntLit>(&e.node)) return l->value;
  if (const auto* x = std::get_if<Var>(&e.node)) return v.get(x->name);
  if (const auto* p = std::get_if<Add>(&e.node))
    return eval_aexpr(*p->left, v) + eval_aexpr(*p->right, v);
  const auto& p = std::get<Sub>(e.node);
  return eval_aexpr(*p.left, v) - eval_aexpr(*p.right, v);
}

bool eval_bexpr(const Bexpr& b, const Env& v) {
  if (std::holds_alternative<BTrue>(b.node)) return true;
  if (std::holds_alternative<BFalse>(b.node)) return false;
  if (const auto* p = std::get_if<And>(&b.node))
    return eval_bexpr(*p->left, v) && eval_bexpr(*p->right, v);
  if (const auto* p = std::get_if<Or>(&b.node))
    return eval_bexpr(*p->left, v) || eval_bexpr(*p->right, v);
  if (const auto* p = std::get_if<Not>(&b.node)) return !eval_bexpr(*p->arg, v);
  const auto& p = std::get<Cmp>(b.node);
  const Int l = eval_aexpr(*p.left, v);
  const Int r = eval_aexpr(*p.right, v);
  switch (p.op) {
    case CmpOp::Eq: return l == r;
    case CmpOp::Le: return l <= r;
    case CmpOp::Lt: return l < r;
    case CmpOp::Ge: return l >= r;
    case CmpOp::Gt: return l > r;
  }
  return false;
}

std::optional<ConcState> step(const ConcState& s) {
  const Stmt& pc = *s.pc;
  if (const auto* p = std::get_if<Assign>(&pc.node)) {
    return ConcState{s.env.set(p->var, eval_aexpr(*p->rhs, s.env)), mk_skip()};
  }
  if (const auto* p = std::get_if<If>(&pc.node)) {
    return ConcState{s.env, eval_bexpr(*p->cond, s.env) ? p->then_branch : p->else_branch};
  }
  if (const auto* p = std::get_if<Seq>(&pc.node)) {
    if (std::holds_alternative<Skip>(p->first->node)) return ConcState{s.env, p->second};
    auto head = step(ConcState{s.env, p->first});
    if (!head) return std::nullopt;
    return ConcState{std::move(head->env), mk_seq(std::move(head->pc), p->second)};
  }
  if (const auto* p = std::get_if<While>(&pc.node)) {
    if (eval_bexpr(*p->cond, s.env)) return ConcState{s.env, mk_seq(p->body, s.pc)};
    return ConcState{s.env, mk_skip()};
  }
  return std::nullopt;  // skip or fail
}

ExecOutcome exec(ConcState s, long fuel) {
  for (long i = 0; i < fuel; ++i) {
    if (std::holds_alternative<Skip>(s.pc->node))
      return {ExecOutcome::Kind::Terminated, std::move(s)};
    auto succ = step(s);
    if (!succ) return {ExecOutcome::Kind::StuckAt, std::move(s)};
    s = std::move(*succ);
  }
  if (std::holds_alternative<Skip>(s.pc->node))
    return {ExecOutcome::Kind::Terminated, std::move(s)};
  return {ExecOutcome::Kind::OutOfFuel, std::move(s)};
}

bool progress(const ConcState& s) {
  return std::holds_alternative<Skip>(s.pc->node) || step(s).has_value();
}

bool is_stuck_concrete(const ConcState& s) { return !progress(s); }

BadInputVerdict bad_input(const StmtPtr& p, const Env& v0, long fuel) {
  const ExecOutcome outcome = exec(ConcState{v0, p}, fuel);
  switch (outcome.kind) {
    case ExecOutcome::Kind::StuckAt: return BadInputVerdict::Yes;
    case ExecOutcome::Kind::Terminated: return BadInputVerdict::NoTerminated;
    case ExecOutcome::Kind::OutOfFuel: return BadInputVerdict::Unknown;
  }
  return BadInputVerdict::Unknown;
}

}  // namespace wise
