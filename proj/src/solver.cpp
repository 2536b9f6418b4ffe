#include "wise/solver.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace wise {

namespace {

// Floor division / ceil division over cpp_int ('/' truncates toward zero).
Int fdiv(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}
Int cdiv(const Int& a, const Int& b) { return -fdiv(-a, b); }

// Symmetric remainder in (-m/2, m/2].
Int symmod(const Int& a, const Int& m) {
  Int r = a - m * fdiv(a, m);  // in [0, m)
  if (2 * r > m) r -= m;
  return r;
}

// ---------------------------------------------------------------------------
// Linearization
// ---------------------------------------------------------------------------

struct Lin {
  std::map<std::string, Int> coeffs;
  Int constant;

  void accumulate(const Aexpr& e, const Int& sign) {
    if (const auto* l = std::get_if<IntLit>(&e.node)) {
      constant += sign * l->value;
    } else if (const auto* v = std::get_if<Var>(&e.node)) {
      coeffs[v->name] += sign;
    } else if (const auto* p = std::get_if<Add>(&e.node)) {
      accumulate(*p->left, sign);
      accumulate(*p->right, sign);
    } else {
      const auto& s = std::get<Sub>(e.node);
      accumulate(*s.left, sign);
      accumulate(*s.right, -sign);
    }
  }

  void prune_zeros() {
    for (auto it = coeffs.begin(); it != coeffs.end();)
      it = it->second == 0 ? coeffs.erase(it) : std::next(it);
  }
};

Lin linearize_diff(const Cmp& c) {
  Lin out;
  out.accumulate(*c.left, 1);
  out.accumulate(*c.right, -1);
  out.prune_zeros();
  return out;
}

LinearConstraint make_le(Lin lin, Int extra) {
  lin.constant += extra;
  return LinearConstraint{std::move(lin.coeffs), std::move(lin.constant),
                          LinearConstraint::Rel::Le};
}

LinearConstraint make_eq(Lin lin) {
  return LinearConstraint{std::move(lin.coeffs), std::move(lin.constant),
                          LinearConstraint::Rel::Eq};
}

Lin negated(const Lin& lin) {
  Lin out;
  out.constant = -lin.constant;
  for (const auto& [k, v] : lin.coeffs) out.coeffs[k] = -v;
  return out;
}

// One comparison literal (possibly under negation) as clauses of normal-form
// constraints. Disequalities split into two strict disjuncts.
std::vector<Clause> literal_clauses(const Cmp& c, bool positive) {
  const Lin d = linearize_diff(c);  // d REL 0 where d = left - right
  switch (c.op) {
    case CmpOp::Eq:
      if (positive) return {{make_eq(d)}};
      return {{make_le(d, 1)}, {make_le(negated(d), 1)}};  // d < 0 or d > 0
    case CmpOp::Le:
      return positive ? std::vector<Clause>{{make_le(d, 0)}}
                      : std::vector<Clause>{{make_le(negated(d), 1)}};
    case CmpOp::Lt:
      return positive ? std::vector<Clause>{{make_le(d, 1)}}
                      : std::vector<Clause>{{make_le(negated(d), 0)}};
    case CmpOp::Ge:
      return positive ? std::vector<Clause>{{make_le(negated(d), 0)}}
                      : std::vector<Clause>{{make_le(d, 1)}};
    case CmpOp::Gt:
      return positive ? std::vector<Clause>{{make_le(negated(d), 1)}}
                      : std::vector<Clause>{{make_le(d, 0)}};
  }
  return {};
}

std::vector<Clause> to_dnf(const Bexpr& b, bool positive, std::size_t cap) {
  if (std::holds_alternative<BTrue>(b.node))
    return positive ? std::vector<Clause>{Clause{}} : std::vector<Clause>{};
  if (std::holds_alternative<BFalse>(b.node))
    return positive ? std::vector<Clause>{} : std::vector<Clause>{Clause{}};
  if (const auto* p = std::get_if<Not>(&b.node)) return to_dnf(*p->arg, !positive, cap);
  if (const auto* p = std::get_if<Cmp>(&b.node)) return literal_clauses(*p, positive);

  const BexprPtr* left;
  const BexprPtr* right;
  bool conjunctive;
  if (const auto* p = std::get_if<And>(&b.node)) {
    left = &p->left;
    right = &p->right;
    conjunctive = positive;
  } else {
    const auto& o = std::get<Or>(b.node);
    left = &o.left;
    right = &o.right;
    conjunctive = !positive;
  }
  std::vector<Clause> l = to_dnf(**left, positive, cap);
  std::vector<Clause> r = to_dnf(**right, positive, cap);
  if (!conjunctive) {
    if (l.size() + r.size() > cap) throw DnfBlowup();
    l.insert(l.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
    return l;
  }
  if (l.size() * r.size() > cap) throw DnfBlowup();
  std::vector<Clause> out;
  out.reserve(l.size() * r.size());
  for (const Clause& cl : l) {
    for (const Clause& cr : r) {
      Clause merged = cl;
      merged.insert(merged.end(), cr.begin(), cr.end());
      out.push_back(std::move(merged));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Omega-style elimination core
// ---------------------------------------------------------------------------

enum class Feas { Sat, Unsat, Unknown };

struct SysResult {
  Feas feas;
  std::map<std::string, Int> model;
};

Int eval_lin(const std::map<std::string, Int>& coeffs, const Int& constant,
             const std::map<std::string, Int>& model) {
  Int v = constant;
  for (const auto& [name, c] : coeffs) {
    auto it = model.find(name);
    if (it != model.end()) v += c * it->second;
  }
  return v;
}

std::string encode(const LinearConstraint& c) {
  std::ostringstream os;
  os << (c.rel == LinearConstraint::Rel::Eq ? "=" : "<");
  for (const auto& [k, v] : c.coeffs) os << "|" << k << ":" << v;
  os << "|#" << c.constant;
  return os.str();
}

// Bounds on one variable x extracted from a <=-constraint:
//   coeff > 0:  coeff * x <= bound   (upper)
//   coeff < 0: |coeff| * x >= bound  (lower)
struct Bound {
  Int scale;               // positive
  std::map<std::string, Int> coeffs;  // bound expression over the other vars
  Int constant;
};

Bound upper_of(const LinearConstraint& c, const std::string& x) {
  Bound b;
  b.scale = c.coeffs.at(x);
  b.constant = -c.constant;
  for (const auto& [k, v] : c.coeffs)
    if (k != x) b.coeffs[k] = -v;
  return b;
}

Bound lower_of(const LinearConstraint& c, const std::string& x) {
  Bound b;
  b.scale = -c.coeffs.at(x);
  b.constant = c.constant;
  for (const auto& [k, v] : c.coeffs)
    if (k != x) b.coeffs[k] = v;
  return b;
}

struct Eliminator {
  long budget;
  int fresh = 0;
  bool exhausted = false;

  bool spend() {
    if (budget <= 0) {
      exhausted = true;
      return false;
    }
    --budget;
    return true;
  }

  // Substitutes x := expr (a Lin with unit semantics: x equals
  // coeffs . vars + constant) into a constraint.
  static LinearConstraint substitute(const LinearConstraint& c, const std::string& x,
                                     const std::map<std::string, Int>& expr_coeffs,
                                     const Int& expr_constant) {
    auto it = c.coeffs.find(x);
    if (it == c.coeffs.end()) return c;
    const Int a = it->second;
    LinearConstraint out;
    out.rel = c.rel;
    out.coeffs = c.coeffs;
    out.coeffs.erase(x);
    out.constant = c.constant + a * expr_constant;
    for (const auto& [k, v] : expr_coeffs) out.coeffs[k] += a * v;
    for (auto jt = out.coeffs.begin(); jt != out.coeffs.end();)
      jt = jt->second == 0 ? out.coeffs.erase(jt) : std::next(jt);
    return out;
  }

  SysResult solve(std::vector<LinearConstraint> cs) {
    if (!spend()) return {Feas::Unknown, {}};

    // Normalize: drop zero coefficients, reduce by gcd, tighten <=,
    // discharge variable-free constraints, dedup.
    std::vector<LinearConstraint> sys;
    std::set<std::string> seen;
    for (LinearConstraint& c : cs) {
      for (auto it = c.coeffs.begin(); it != c.coeffs.end();)
        it = it->second == 0 ? c.coeffs.erase(it) : std::next(it);
      if (c.coeffs.empty()) {
        const bool ok = c.rel == LinearConstraint::Rel::Eq ? c.constant == 0 : c.constant <= 0;
        if (!ok) return {Feas::Unsat, {}};
        continue;
      }
      Int g = 0;
      for (const auto& [k, v] : c.coeffs) g = gcd(g, abs(v));
      if (g > 1) {
        if (c.rel == LinearConstraint::Rel::Eq) {
          if (c.constant % g != 0) return {Feas::Unsat, {}};
          c.constant /= g;
        } else {
          c.constant = cdiv(c.constant, g);
        }
        for (auto& [k, v] : c.coeffs) v /= g;
      }
      if (seen.insert(encode(c)).second) sys.push_back(std::move(c));
    }
    if (sys.empty()) return {Feas::Sat, {}};

    // Equality elimination first.
    std::size_t best_eq = sys.size();
    std::string best_eq_var;
    Int best_eq_coeff = 0;
    for (std::size_t i = 0; i < sys.size(); ++i) {
      if (sys[i].rel != LinearConstraint::Rel::Eq) continue;
      for (const auto& [k, v] : sys[i].coeffs) {
        if (best_eq == sys.size() || abs(v) < abs(best_eq_coeff)) {
          best_eq = i;
          best_eq_var = k;
          best_eq_coeff = v;
        }
      }
    }
    if (best_eq < sys.size()) {
      if (abs(best_eq_coeff) == 1) return eliminate_by_equality(sys, best_eq, best_eq_var);
      return reduce_equality(sys, best_eq, best_eq_var, best_eq_coeff);
    }
    return eliminate_inequality_var(sys);
  }

  SysResult eliminate_by_equality(const std::vector<LinearConstraint>& sys, std::size_t idx,
                                  const std::string& x) {
    const LinearConstraint& eq = sys[idx];
    const Int a = eq.coeffs.at(x);  // +-1
    // a*x + rest + k = 0  =>  x = -(rest + k)/a
    std::map<std::string, Int> expr_coeffs;
    Int expr_constant = -eq.constant / a;
    for (const auto& [k, v] : eq.coeffs)
      if (k != x) expr_coeffs[k] = -v / a;
    std::vector<LinearConstraint> rest;
    rest.reserve(sys.size() - 1);
    for (std::size_t i = 0; i < sys.size(); ++i)
      if (i != idx) rest.push_back(substitute(sys[i], x, expr_coeffs, expr_constant));
    SysResult r = solve(std::move(rest));
    if (r.feas == Feas::Sat) r.model[x] = eval_lin(expr_coeffs, expr_constant, r.model);
    return r;
  }

  // Pugh's reduction for an equality whose smallest coefficient has
  // magnitude >= 2: introduce a fresh variable via symmetric remainders,
  // which yields a unit coefficient for x.
  SysResult reduce_equality(std::vector<LinearConstraint> sys, std::size_t idx,
                            const std::string& x, const Int& a) {
    const Int m = abs(a) + 1;
    const std::string sigma = "$" + std::to_string(fresh++);
    const LinearConstraint& eq = sys[idx];
    LinearConstraint derived;
    derived.rel = LinearConstraint::Rel::Eq;
    derived.constant = symmod(eq.constant, m);
    for (const auto& [k, v] : eq.coeffs) derived.coeffs[k] = symmod(v, m);
    derived.coeffs[sigma] = -m;
    sys.push_back(std::move(derived));
    return solve(std::move(sys));
  }

  SysResult eliminate_inequality_var(const std::vector<LinearConstraint>& sys) {
    // Gather per-variable bound lists.
    std::map<std::string, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> occ;
    for (std::size_t i = 0; i < sys.size(); ++i) {
      for (const auto& [k, v] : sys[i].coeffs) {
        if (v > 0)
          occ[k].second.push_back(i);  // upper
        else
          occ[k].first.push_back(i);  // lower
      }
    }
    // One-sided variables are unconstrained in one direction: drop their
    // constraints and fix a value afterwards.
    for (const auto& [x, lu] : occ) {
      if (lu.first.empty() || lu.second.empty()) return eliminate_one_sided(sys, x);
    }
    // Pick the cheapest variable, preferring exact eliminations.
    std::string best;
    bool best_exact = false;
    std::size_t best_cost = 0;
    for (const auto& [x, lu] : occ) {
      const bool exact =
          std::all_of(lu.first.begin(), lu.first.end(),
                      [&](std::size_t i) { return sys[i].coeffs.at(x) == -1; }) ||
          std::all_of(lu.second.begin(), lu.second.end(),
                      [&](std::size_t i) { return sys[i].coeffs.at(x) == 1; });
      const std::size_t cost = lu.first.size() * lu.second.size();
      if (best.empty() || (exact && !best_exact) || (exact == best_exact && cost < best_cost)) {
        best = x;
        best_exact = exact;
        best_cost = cost;
      }
    }
    return fourier_motzkin(sys, best, best_exact);
  }

  SysResult eliminate_one_sided(const std::vector<LinearConstraint>& sys, const std::string& x) {
    std::vector<LinearConstraint> rest;
    std::vector<LinearConstraint> dropped;
    for (const LinearConstraint& c : sys)
      (c.coeffs.count(x) ? dropped : rest).push_back(c);
    SysResult r = solve(std::move(rest));
    if (r.feas != Feas::Sat) return r;
    // Push x beyond every dropped one-sided bound.
    std::optional<Int> low, high;
    for (const LinearConstraint& c : dropped) {
      if (c.coeffs.at(x) > 0) {
        Bound u = upper_of(c, x);
        Int b = fdiv(eval_lin(u.coeffs, u.constant, r.model), u.scale);
        high = high ? std::min(*high, b) : b;
      } else {
        Bound l = lower_of(c, x);
        Int b = cdiv(eval_lin(l.coeffs, l.constant, r.model), l.scale);
        low = low ? std::max(*low, b) : b;
      }
    }
    r.model[x] = low ? *low : (high ? *high : Int(0));
    return r;
  }

  SysResult fourier_motzkin(const std::vector<LinearConstraint>& sys, const std::string& x,
                            bool exact) {
    std::vector<LinearConstraint> rest;
    std::vector<Bound> lowers, uppers;
    std::vector<LinearConstraint> with_x;
    for (const LinearConstraint& c : sys) {
      auto it = c.coeffs.find(x);
      if (it == c.coeffs.end()) {
        rest.push_back(c);
      } else {
        with_x.push_back(c);
        if (it->second > 0)
          uppers.push_back(upper_of(c, x));
        else
          lowers.push_back(lower_of(c, x));
      }
    }
    auto shadow = [&](bool dark) {
      std::vector<LinearConstraint> out = rest;
      for (const Bound& l : lowers) {
        for (const Bound& u : uppers) {
          // b*alpha - a*beta (+ (a-1)(b-1) when dark) <= 0, a = l.scale, b = u.scale
          LinearConstraint c;
          c.rel = LinearConstraint::Rel::Le;
          c.constant = u.scale * l.constant - l.scale * u.constant;
          for (const auto& [k, v] : l.coeffs) c.coeffs[k] += u.scale * v;
          for (const auto& [k, v] : u.coeffs) c.coeffs[k] -= l.scale * v;
          if (dark) c.constant += (l.scale - 1) * (u.scale - 1);
          out.push_back(std::move(c));
        }
      }
      return out;
    };
    auto with_value = [&](SysResult r) {
      Int lo;
      bool has_lo = false;
      for (const Bound& l : lowers) {
        Int b = cdiv(eval_lin(l.coeffs, l.constant, r.model), l.scale);
        if (!has_lo || b > lo) {
          lo = b;
          has_lo = true;
        }
      }
      r.model[x] = lo;
      return r;
    };

    SysResult r = solve(shadow(/*dark=*/!exact));
    if (r.feas == Feas::Sat) return with_value(std::move(r));
    if (exact || r.feas == Feas::Unknown) return r;

    // Dark shadow empty: integer solutions, if any, hug a lower bound.
    Int b_max = 1;
    for (const Bound& u : uppers) b_max = std::max(b_max, u.scale);
    bool saw_unknown = false;
    for (const Bound& l : lowers) {
      const Int imax = fdiv(l.scale * b_max - l.scale - b_max, b_max);
      for (Int i = 0; i <= imax; ++i) {
        std::vector<LinearConstraint> splinter = sys;
        LinearConstraint eq;
        eq.rel = LinearConstraint::Rel::Eq;
        eq.coeffs[x] = l.scale;
        for (const auto& [k, v] : l.coeffs) eq.coeffs[k] -= v;
        eq.constant = -(l.constant + i);
        splinter.push_back(std::move(eq));
        SysResult sr = solve(std::move(splinter));
        if (sr.feas == Feas::Sat) return sr;
        if (sr.feas == Feas::Unknown) saw_unknown = true;
      }
    }
    return {saw_unknown ? Feas::Unknown : Feas::Unsat, {}};
  }
};

bool constraint_holds(const LinearConstraint& c, const Env& env) {
  Int v = c.constant;
  for (const auto& [name, coeff] : c.coeffs) v += coeff * env.get(name);
  return c.rel == LinearConstraint::Rel::Eq ? v == 0 : v <= 0;
}

Env model_from(const std::map<std::string, Int>& raw) {
  Env env;
  for (const auto& [name, value] : raw)
    if (!name.starts_with("$")) env = env.set(name, value);
  return env;
}

SatResult solve_clause_impl(const Clause& clause, Eliminator& elim) {
  SysResult r = elim.solve(clause);
  switch (r.feas) {
    case Feas::Unsat: return {SatResult::Kind::Unsat, {}};
    case Feas::Unknown:
      return {SatResult::Kind::Unknown, {}, SatResult::UnknownReason::BudgetExhausted};
    case Feas::Sat: break;
  }
  Env model = model_from(r.model);
  for (const LinearConstraint& c : clause) {
    if (!constraint_holds(c, model))
      throw std::logic_error("solver produced an invalid model for a clause");
  }
  return {SatResult::Kind::Sat, std::move(model)};
}

}  // namespace

Dnf normalize(const Bexpr& phi, std::size_t clause_cap) {
  return Dnf{to_dnf(phi, /*positive=*/true, clause_cap)};
}

SatResult solve_clause(const Clause& clause, long budget) {
  Eliminator elim{budget};
  return solve_clause_impl(clause, elim);
}

SatResult is_sat(const Bexpr& phi, long budget) {
  Dnf dnf;
  try {
    dnf = normalize(phi);
  } catch (const DnfBlowup&) {
    return {SatResult::Kind::Unknown, {}, SatResult::UnknownReason::DnfBlowup};
  }
  Eliminator elim{budget};
  bool saw_unknown = false;
  for (const Clause& clause : dnf.clauses) {
    SatResult r = solve_clause_impl(clause, elim);
    if (r.sat()) {
      if (!eval_bexpr(phi, r.model))
        throw std::logic_error("solver produced an invalid model for a path condition");
      return r;
    }
    if (r.unknown()) saw_unknown = true;
  }
  if (saw_unknown) return {SatResult::Kind::Unknown, {}, SatResult::UnknownReason::BudgetExhausted};
  return {SatResult::Kind::Unsat, {}};
}

namespace {

void smt_aexpr(std::ostream& os, const Aexpr& e) {
  if (const auto* l = std::get_if<IntLit>(&e.node)) {
    if (l->value < 0)
      os << "(- " << -l->value << ")";
    else
      os << l->value;
  } else if (const auto* v = std::get_if<Var>(&e.node)) {
    os << v->name;
  } else if (const auto* p = std::get_if<Add>(&e.node)) {
    os << "(+ ";
    smt_aexpr(os, *p->left);
    os << " ";
    smt_aexpr(os, *p->right);
    os << ")";
  } else {
    const auto& s = std::get<Sub>(e.node);
    os << "(- ";
    smt_aexpr(os, *s.left);
    os << " ";
    smt_aexpr(os, *s.right);
    os << ")";
  }
}

void smt_bexpr(std::ostream& os, const Bexpr& b) {
  if (std::holds_alternative<BTrue>(b.node)) {
    os << "true";
  } else if (std::holds_alternative<BFalse>(b.node)) {
    os << "false";
  } else if (const auto* p = std::get_if<And>(&b.node)) {
    os << "(and ";
    smt_bexpr(os, *p->left);
    os << " ";
    smt_bexpr(os, *p->right);
    os << ")";
  } else if (const auto* p = std::get_if<Or>(&b.node)) {
    os << "(or ";
    smt_bexpr(os, *p->left);
    os << " ";
    smt_bexpr(os, *p->right);
    os << ")";
  } else if (const auto* p = std::get_if<Not>(&b.node)) {
    os << "(not ";
    smt_bexpr(os, *p->arg);
    os << ")";
  } else {
    const auto& c = std::get<Cmp>(b.node);
    const char* op = "=";
    switch (c.op) {
      case CmpOp::Eq: op = "="; break;
      case CmpOp::Le: op = "<="; break;
      case CmpOp::Lt: op = "<"; break;
      case CmpOp::Ge: op = ">="; break;
      case CmpOp::Gt: op = ">"; break;
    }
    os << "(" << op << " ";
    smt_aexpr(os, *c.left);
    os << " ";
    smt_aexpr(os, *c.right);
    os << ")";
  }
}

}  // namespace

std::string emit_smtlib(const Bexpr& phi) {
  std::vector<std::string> vars = variables_of(phi);
  std::sort(vars.begin(), vars.end());
  std::ostringstream os;
  os << "(set-logic QF_LIA)\n";
  for (const std::string& v : vars) os << "(declare-const " << v << " Int)\n";
  os << "(assert ";
  smt_bexpr(os, phi);
  os << ")\n(check-sat)\n(get-model)\n";
  return os.str();
}

}  // namespace wise
