#include "wise/ast.hpp"

#include <algorithm>

namespace wise {

AexprPtr lit(Int value) { return std::make_shared<Aexpr>(Aexpr{IntLit{std::move(value)}}); }
AexprPtr var_ref(std::string name) { return std::make_shared<Aexpr>(Aexpr{Var{std::move(name)}}); }
AexprPtr add(AexprPtr left, AexprPtr right) {
  return std::make_shared<Aexpr>(Aexpr{Add{std::move(left), std::move(right)}});
}
AexprPtr sub(AexprPtr left, AexprPtr right) {
  return std::make_shared<Aexpr>(Aexpr{Sub{std::move(left), std::move(right)}});
}

BexprPtr tt() {
  static const BexprPtr instance = std::make_shared<Bexpr>(Bexpr{BTrue{}});
  return instance;
}
BexprPtr ff() {
  static const BexprPtr instance = std::make_shared<Bexpr>(Bexpr{BFalse{}});
  return instance;
}
BexprPtr conj(BexprPtr left, BexprPtr right) {
  return std::make_shared<Bexpr>(Bexpr{And{std::move(left), std::move(right)}});
}
BexprPtr disj(BexprPtr left, BexprPtr right) {
  return std::make_shared<Bexpr>(Bexpr{Or{std::move(left), std::move(right)}});
}
BexprPtr neg(BexprPtr arg) { return std::make_shared<Bexpr>(Bexpr{Not{std::move(arg)}}); }
BexprPtr cmp(CmpOp op, AexprPtr left, AexprPtr right) {
  return std::make_shared<Bexpr>(Bexpr{Cmp{op, std::move(left), std::move(right)}});
}

StmtPtr mk_skip() {
  static const StmtPtr instance = std::make_shared<Stmt>(Stmt{Skip{}});
  return instance;
}
StmtPtr mk_fail() {
  static const StmtPtr instance = std::make_shared<Stmt>(Stmt{Fail{}});
  return instance;
}
StmtPtr mk_assign(std::string var, AexprPtr rhs) {
  return std::make_shared<Stmt>(Stmt{Assign{std::move(var), std::move(rhs)}});
}
StmtPtr mk_seq(StmtPtr first, StmtPtr second) {
  return std::make_shared<Stmt>(Stmt{Seq{std::move(first), std::move(second)}});
}
StmtPtr mk_while(BexprPtr cond, StmtPtr body) {
  return std::make_shared<Stmt>(Stmt{While{std::move(cond), std::move(body)}});
}
StmtPtr mk_if(BexprPtr cond, StmtPtr then_branch, StmtPtr else_branch) {
  return std::make_shared<Stmt>(
      Stmt{If{std::move(cond), std::move(then_branch), std::move(else_branch)}});
}

bool equal(const Aexpr& a, const Aexpr& b) {
  if (a.node.index() != b.node.index()) return false;
  if (const auto* l = std::get_if<IntLit>(&a.node))
    return l->value == std::get<IntLit>(b.node).value;
  if (const auto* v = std::get_if<Var>(&a.node)) return v->name == std::get<Var>(b.node).name;
  if (const auto* p = std::get_if<Add>(&a.node)) {
    const auto& q = std::get<Add>(b.node);
    return equal(*p->left, *q.left) && equal(*p->right, *q.right);
  }
  const auto& p = std::get<Sub>(a.node);
  const auto& q = std::get<Sub>(b.node);
  return equal(*p.left, *q.left) && equal(*p.right, *q.right);
}

bool equal(const Bexpr& a, const Bexpr& b) {
  if (a.node.index() != b.node.index()) return false;
  if (std::holds_alternative<BTrue>(a.node) || std::holds_alternative<BFalse>(a.node)) return true;
  if (const auto* p = std::get_if<And>(&a.node)) {
    const auto& q = std::get<And>(b.node);
    return equal(*p->left, *q.left) && equal(*p->right, *q.right);
  }
  if (const auto* p = std::get_if<Or>(&a.node)) {
    const auto& q = std::get<Or>(b.node);
    return equal(*p->left, *q.left) && equal(*p->right, *q.right);
  }
  if (const auto* p = std::get_if<Not>(&a.node)) return equal(*p->arg, *std::get<Not>(b.node).arg);
  const auto& p = std::get<Cmp>(a.node);
  const auto& q = std::get<Cmp>(b.node);
  return p.op == q.op && equal(*p.left, *q.left) && equal(*p.right, *q.right);
}

bool equal(const Stmt& a, const Stmt& b) {
  if (a.node.index() != b.node.index()) return false;
  if (std::holds_alternative<Skip>(a.node) || std::holds_alternative<Fail>(a.node)) return true;
  if (const auto* p = std::get_if<Assign>(&a.node)) {
    const auto& q = std::get<Assign>(b.node);
    return p->var == q.var && equal(*p->rhs, *q.rhs);
  }
  if (const auto* p = std::get_if<Seq>(&a.node)) {
    const auto& q = std::get<Seq>(b.node);
    return equal(*p->first, *q.first) && equal(*p->second, *q.second);
  }
  if (const auto* p = std::get_if<While>(&a.node)) {
    const auto& q = std::get<While>(b.node);
    return equal(*p->cond, *q.cond) && equal(*p->body, *q.body);
  }
  const auto& p = std::get<If>(a.node);
  const auto& q = std::get<If>(b.node);
  return equal(*p.cond, *q.cond) && equal(*p.then_branch, *q.then_branch) &&
         equal(*p.else_branch, *q.else_branch);
}

bool equal(const AexprPtr& a, const AexprPtr& b) { return equal(*a, *b); }
bool equal(const BexprPtr& a, const BexprPtr& b) { return equal(*a, *b); }
bool equal(const StmtPtr& a, const StmtPtr& b) { return equal(*a, *b); }

namespace {
void push_unique(std::vector<std::string>& out, const std::string& name) {
  if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
}
}  // namespace

void collect_vars(const Aexpr& e, std::vector<std::string>& out) {
  if (const auto* v = std::get_if<Var>(&e.node)) {
    push_unique(out, v->name);
  } else if (const auto* p = std::get_if<Add>(&e.node)) {
    collect_vars(*p->left, out);
    collect_vars(*p->right, out);
  } else if (const auto* p = std::get_if<Sub>(&e.node)) {
    collect_vars(*p->left, out);
    collect_vars(*p->right, out);
  }
}

void collect_vars(const Bexpr& b, std::vector<std::string>& out) {
  if (const auto* p = std::get_if<And>(&b.node)) {
    collect_vars(*p->left, out);
    collect_vars(*p->right, out);
  } else if (const auto* p = std::get_if<Or>(&b.node)) {
    collect_vars(*p->left, out);
    collect_vars(*p->right, out);
  } else if (const auto* p = std::get_if<Not>(&b.node)) {
    collect_vars(*p->arg, out);
  } else if (const auto* p = std::get_if<Cmp>(&b.node)) {
    collect_vars(*p->left, out);
    collect_vars(*p->right, out);
  }
}

void collect_vars(const Stmt& s, std::vector<std::string>& out) {
  if (const auto* p = std::get_if<Assign>(&s.node)) {
    push_unique(out, p->var);
    collect_vars(*p->rhs, out);
  } else if (const auto* p = std::get_if<Seq>(&s.node)) {
    collect_vars(*p->first, out);
    collect_vars(*p->second, out);
  } else if (const auto* p = std::get_if<While>(&s.node)) {
    collect_vars(*p->cond, out);
    collect_vars(*p->body, out);
  } else if (const auto* p = std::get_if<If>(&s.node)) {
    collect_vars(*p->cond, out);
    collect_vars(*p->then_branch, out);
    collect_vars(*p->else_branch, out);
  }
}

std::vector<std::string> variables_of(const Stmt& s) {
  std::vector<std::string> out;
  collect_vars(s, out);
  return out;
}

std::vector<std::string> variables_of(const Bexpr& b) {
  std::vector<std::string> out;
  collect_vars(b, out);
  return out;
}

}  // namespace wise
