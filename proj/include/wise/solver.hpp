#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "wise/ast.hpp"
#include "wise/concrete.hpp"

namespace wise {

struct SatResult {
  enum class Kind { Sat, Unsat, Unknown };
  enum class UnknownReason { None, BudgetExhausted, DnfBlowup };

  Kind kind;
  Env model;  // validated when kind == Sat
  UnknownReason reason = UnknownReason::None;

  bool sat() const { return kind == Kind::Sat; }
  bool unsat() const { return kind == Kind::Unsat; }
  bool unknown() const { return kind == Kind::Unknown; }
};

/// sum(coeffs[x] * x) + constant  REL  0, with REL in {<=, ==}.
/// Strict and reversed comparisons are tightened into this normal form
/// during linearization (a < b becomes a <= b - 1 over the integers);
/// disequalities split into two strict disjuncts.
struct LinearConstraint {
  enum class Rel { Le, Eq };
  std::map<std::string, Int> coeffs;
  Int constant;
  Rel rel;
};

using Clause = std::vector<LinearConstraint>;

struct Dnf {
  std::vector<Clause> clauses;  // empty clause list means "false"
};

class DnfBlowup : public std::runtime_error {
 public:
  DnfBlowup() : std::runtime_error("DNF clause count exceeds the configured cap") {}
};

inline constexpr std::size_t kDnfClauseCap = 4096;
inline constexpr long kDefaultSolverBudget = 100000;

/// Negation normal form, then DNF over linearized literals. Semantically
/// equivalent to phi over all environments. Throws DnfBlowup beyond the cap.
Dnf normalize(const Bexpr& phi, std::size_t clause_cap = kDnfClauseCap);

/// Integer feasibility of one conjunction by omega-style variable
/// elimination with exact divisibility handling. Sat models are validated
/// against the clause.
SatResult solve_clause(const Clause& clause, long budget = kDefaultSolverBudget);

/// Satisfiability of an arbitrary path condition over Z. Sat carries a
/// model validated against phi; Unsat only comes from the complete
/// elimination core; Unknown on budget exhaustion or DNF blowup.
SatResult is_sat(const Bexpr& phi, long budget = kDefaultSolverBudget);

/// Self-contained SMT-LIB2 (QF_LIA) script with one assert for phi.
std::string emit_smtlib(const Bexpr& phi);

}  // namespace wise
