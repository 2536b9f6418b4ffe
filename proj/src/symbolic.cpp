#include "wise/symbolic.hpp"

namespace wise {

bool equal(const SymState& a, const SymState& b) {
  return equal(*a.path, *b.path) && a.store == b.store && equal(*a.pc, *b.pc);
}

SymState initial_state(StmtPtr p, BexprPtr path) {
  return SymState{std::move(path), SymStore{}, std::move(p)};
}

AexprPtr sym_eval_aexpr(const Aexpr& e, const SymStore& s) {
  if (const auto* l = std::get_if<IntLit>(&e.node)) return lit(l->value);
  if (const auto* x = std::get_if<Var>(&e.node)) return s.get(x->name);
  if (const auto* p = std::get_if<Add>(&e.node))
    return add(sym_eval_aexpr(*p->left, s), sym_eval_aexpr(*p->right, s));
  const auto& p = std::get<Sub>(e.node);
  return sub(sym_eval_aexpr(*p.left, s), sym_eval_aexpr(*p.right, s));
}

BexprPtr sym_eval_bexpr(const Bexpr& b, const SymStore& s) {
  if (std::holds_alternative<BTrue>(b.node)) return tt();
  if (std::holds_alternative<BFalse>(b.node)) return ff();
  if (const auto* p = std::get_if<And>(&b.node))
    return conj(sym_eval_bexpr(*p->left, s), sym_eval_bexpr(*p->right, s));
  if (const auto* p = std::get_if<Or>(&b.node))
    return disj(sym_eval_bexpr(*p->left, s), sym_eval_bexpr(*p->right, s));
  if (const auto* p = std::get_if<Not>(&b.node)) return neg(sym_eval_bexpr(*p->arg, s));
  const auto& p = std::get<Cmp>(b.node);
  return cmp(p.op, sym_eval_aexpr(*p.left, s), sym_eval_aexpr(*p.right, s));
}

std::vector<SymState> expand(const SymState& s) {
  const Stmt& pc = *s.pc;
  if (std::holds_alternative<Skip>(pc.node) || std::holds_alternative<Fail>(pc.node)) return {};
  if (const auto* p = std::get_if<Seq>(&pc.node)) {
    if (std::holds_alternative<Skip>(p->first->node))
      return {SymState{s.path, s.store, p->second}};
    std::vector<SymState> out;
    for (SymState& head : expand(SymState{s.path, s.store, p->first})) {
      out.push_back(SymState{std::move(head.path), std::move(head.store),
                             mk_seq(std::move(head.pc), p->second)});
    }
    return out;
  }
  if (const auto* p = std::get_if<Assign>(&pc.node)) {
    return {SymState{s.path, s.store.set(p->var, sym_eval_aexpr(*p->rhs, s.store)), mk_skip()}};
  }
  if (const auto* p = std::get_if<While>(&pc.node)) {
    BexprPtr guard = sym_eval_bexpr(*p->cond, s.store);
    return {SymState{conj(s.path, guard), s.store, mk_seq(p->body, s.pc)},
            SymState{conj(s.path, neg(guard)), s.store, mk_skip()}};
  }
  const auto& p = std::get<If>(pc.node);
  BexprPtr guard = sym_eval_bexpr(*p.cond, s.store);
  return {SymState{conj(s.path, guard), s.store, p.then_branch},
          SymState{conj(s.path, neg(guard)), s.store, p.else_branch}};
}

Env concretize(const Env& v0, const SymStore& s) {
  Env out = v0;
  for (const auto& [name, e] : s.entries()) out = out.set(name, eval_aexpr(*e, v0));
  return out;
}

bool simulates(const ConcState& c, const Env& v0, const SymState& s) {
  return equal(*c.pc, *s.pc) && eval_bexpr(*s.path, v0) && c.env == concretize(v0, s.store);
}

bool is_stuck_sym(const SymState& s) {
  const Stmt* pc = s.pc.get();
  while (true) {
    if (std::holds_alternative<Fail>(pc->node)) return true;
    if (const auto* p = std::get_if<Seq>(&pc->node)) {
      pc = p->first.get();
      continue;
    }
    return false;
  }
}

}  // namespace wise
