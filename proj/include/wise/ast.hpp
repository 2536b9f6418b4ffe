#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace wise {

/// Integers are unbounded: the semantics of IMP is over Z.
using Int = boost::multiprecision::cpp_int;

struct Aexpr;
struct Bexpr;
struct Stmt;

using AexprPtr = std::shared_ptr<const Aexpr>;
using BexprPtr = std::shared_ptr<const Bexpr>;
using StmtPtr = std::shared_ptr<const Stmt>;

// Arithmetic expressions: integer literals, variables, + and -.
struct IntLit {
  Int value;
};
struct Var {
  std::string name;
};
struct Add {
  AexprPtr left, right;
};
struct Sub {
  AexprPtr left, right;
};
struct Aexpr {
  std::variant<IntLit, Var, Add, Sub> node;
};

enum class CmpOp { Eq, Le, Lt, Ge, Gt };

// Boolean expressions: constants, connectives, comparisons.
struct BTrue {};
struct BFalse {};
struct And {
  BexprPtr left, right;
};
struct Or {
  BexprPtr left, right;
};
struct Not {
  BexprPtr arg;
};
struct Cmp {
  CmpOp op;
  AexprPtr left, right;
};
struct Bexpr {
  std::variant<BTrue, BFalse, And, Or, Not, Cmp> node;
};

// Statements: skip, fail, assignment, sequencing, while, if.
struct Skip {};
struct Fail {};
struct Assign {
  std::string var;
  AexprPtr rhs;
};
struct Seq {
  StmtPtr first, second;
};
struct While {
  BexprPtr cond;
  StmtPtr body;
};
struct If {
  BexprPtr cond;
  StmtPtr then_branch, else_branch;
};
struct Stmt {
  std::variant<Skip, Fail, Assign, Seq, While, If> node;
};

// Smart constructors.
AexprPtr lit(Int value);
AexprPtr var_ref(std::string name);
AexprPtr add(AexprPtr left, AexprPtr right);
AexprPtr sub(AexprPtr left, AexprPtr right);

BexprPtr tt();
BexprPtr ff();
BexprPtr conj(BexprPtr left, BexprPtr right);
BexprPtr disj(BexprPtr left, BexprPtr right);
BexprPtr neg(BexprPtr arg);
BexprPtr cmp(CmpOp op, AexprPtr left, AexprPtr right);

StmtPtr mk_skip();
StmtPtr mk_fail();
StmtPtr mk_assign(std::string var, AexprPtr rhs);
StmtPtr mk_seq(StmtPtr first, StmtPtr second);
StmtPtr mk_while(BexprPtr cond, StmtPtr body);
StmtPtr mk_if(BexprPtr cond, StmtPtr then_branch, StmtPtr else_branch);

// Structural equality.
bool equal(const Aexpr& a, const Aexpr& b);
bool equal(const Bexpr& a, const Bexpr& b);
bool equal(const Stmt& a, const Stmt& b);
bool equal(const AexprPtr& a, const AexprPtr& b);
bool equal(const BexprPtr& a, const BexprPtr& b);
bool equal(const StmtPtr& a, const StmtPtr& b);

// Free variables, in first-occurrence order without duplicates.
void collect_vars(const Aexpr& e, std::vector<std::string>& out);
void collect_vars(const Bexpr& b, std::vector<std::string>& out);
void collect_vars(const Stmt& s, std::vector<std::string>& out);
std::vector<std::string> variables_of(const Stmt& s);
std::vector<std::string> variables_of(const Bexpr& b);

}  // namespace wise
