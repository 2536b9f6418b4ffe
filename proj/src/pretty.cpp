#include "wise/pretty.hpp"

#include <sstream>

namespace wise {

namespace {

// Precedence levels. Arithmetic: additive = 1, primary = 2.
// Boolean: or = 0, and = 1, comparison = 2, not = 3, constants = 4.

void print_aexpr(std::ostream& os, const Aexpr& e, int min_level) {
  if (const auto* l = std::get_if<IntLit>(&e.node)) {
    os << l->value;
  } else if (const auto* v = std::get_if<Var>(&e.node)) {
    os << v->name;
  } else {
    const bool is_add = std::holds_alternative<Add>(e.node);
    const AexprPtr& left = is_add ? std::get<Add>(e.node).left : std::get<Sub>(e.node).left;
    const AexprPtr& right = is_add ? std::get<Add>(e.node).right : std::get<Sub>(e.node).right;
    const bool parens = min_level > 1;
    if (parens) os << "(";
    print_aexpr(os, *left, 1);
    os << (is_add ? " + " : " - ");
    print_aexpr(os, *right, 2);  // left-associative: right operand must be primary
    if (parens) os << ")";
  }
}

const char* cmp_text(CmpOp op) {
  switch (op) {
    case CmpOp::Eq: return "==";
    case CmpOp::Le: return "<=";
    case CmpOp::Lt: return "<";
    case CmpOp::Ge: return ">=";
    case CmpOp::Gt: return ">";
  }
  return "?";
}

void print_bexpr(std::ostream& os, const Bexpr& b, int min_level) {
  if (std::holds_alternative<BTrue>(b.node)) {
    os << "true";
  } else if (std::holds_alternative<BFalse>(b.node)) {
    os << "false";
  } else if (const auto* p = std::get_if<Or>(&b.node)) {
    const bool parens = min_level > 0;
    if (parens) os << "(";
    print_bexpr(os, *p->left, 0);
    os << " or ";
    print_bexpr(os, *p->right, 1);
    if (parens) os << ")";
  } else if (const auto* p = std::get_if<And>(&b.node)) {
    const bool parens = min_level > 1;
    if (parens) os << "(";
    print_bexpr(os, *p->left, 1);
    os << " and ";
    print_bexpr(os, *p->right, 2);
    if (parens) os << ")";
  } else if (const auto* p = std::get_if<Cmp>(&b.node)) {
    const bool parens = min_level > 2;
    if (parens) os << "(";
    print_aexpr(os, *p->left, 1);
    os << " " << cmp_text(p->op) << " ";
    print_aexpr(os, *p->right, 1);
    if (parens) os << ")";
  } else {
    const auto& n = std::get<Not>(b.node);
    os << "not ";
    print_bexpr(os, *n.arg, 3);
  }
}

void print_stmt(std::ostream& os, const Stmt& s) {
  if (std::holds_alternative<Skip>(s.node)) {
    os << "skip";
  } else if (std::holds_alternative<Fail>(s.node)) {
    os << "fail";
  } else if (const auto* p = std::get_if<Assign>(&s.node)) {
    os << p->var << " = ";
    print_aexpr(os, *p->rhs, 1);
  } else if (const auto* p = std::get_if<Seq>(&s.node)) {
    print_stmt(os, *p->first);
    os << " ; ";
    print_stmt(os, *p->second);
  } else if (const auto* p = std::get_if<While>(&s.node)) {
    os << "while ";
    print_bexpr(os, *p->cond, 0);
    os << " do ";
    print_stmt(os, *p->body);
    os << " od";
  } else {
    const auto& br = std::get<If>(s.node);
    os << "if ";
    print_bexpr(os, *br.cond, 0);
    os << " then ";
    print_stmt(os, *br.then_branch);
    os << " else ";
    print_stmt(os, *br.else_branch);
    os << " fi";
  }
}

}  // namespace

std::string pretty(const Aexpr& e) {
  std::ostringstream os;
  print_aexpr(os, e, 0);
  return os.str();
}

std::string pretty(const Bexpr& b) {
  std::ostringstream os;
  print_bexpr(os, b, 0);
  return os.str();
}

std::string pretty(const Stmt& s) {
  std::ostringstream os;
  print_stmt(os, s);
  return os.str();
}

std::string pretty(const AexprPtr& e) { return pretty(*e); }
std::string pretty(const BexprPtr& b) { return pretty(*b); }
std::string pretty(const StmtPtr& s) { return pretty(*s); }

}  // namespace wise
