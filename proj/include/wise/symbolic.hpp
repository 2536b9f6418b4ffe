#pragma once

#include <map>
#include <string>
#include <vector>

#include "wise/ast.hpp"
#include "wise/concrete.hpp"

namespace wise {

/// Total symbolic store Vars -> Aexpr; unmentioned variables map to
/// themselves (the identity store).
class SymStore {
 public:
  SymStore() = default;

  AexprPtr get(const std::string& name) const {
    auto it = binds_.find(name);
    return it == binds_.end() ? var_ref(name) : it->second;
  }

  SymStore set(const std::string& name, AexprPtr e) const {
    SymStore out = *this;
    out.binds_[name] = std::move(e);
    return out;
  }

  const std::map<std::string, AexprPtr>& entries() const { return binds_; }

  // Extensional equality over the union of explicitly bound names.
  bool operator==(const SymStore& other) const {
    for (const auto& [k, e] : binds_)
      if (!equal(*other.get(k), *e)) return false;
    for (const auto& [k, e] : other.binds_)
      if (!equal(*get(k), *e)) return false;
    return true;
  }

 private:
  std::map<std::string, AexprPtr> binds_;
};

struct SymState {
  BexprPtr path;   // path condition
  SymStore store;
  StmtPtr pc;
};

bool equal(const SymState& a, const SymState& b);

/// Initial state <true, id, p>, optionally with a stronger initial path
/// condition (used to encode input-domain restrictions).
SymState initial_state(StmtPtr p, BexprPtr path = tt());

/// Capture-free simultaneous substitution of store bindings.
AexprPtr sym_eval_aexpr(const Aexpr& e, const SymStore& s);
BexprPtr sym_eval_bexpr(const Bexpr& b, const SymStore& s);

/// All symbolic successors of a state: zero for skip/fail, one for
/// assignments and skip-headed sequences, two for branches.
std::vector<SymState> expand(const SymState& s);

/// (V o S)(x) := [[S(x)]]_V, pointwise.
Env concretize(const Env& v0, const SymStore& s);

/// sigma ~=_{V0} sigma^: same pc, concretized store, satisfied path.
bool simulates(const ConcState& c, const Env& v0, const SymState& s);

bool is_stuck_sym(const SymState& s);

}  // namespace wise
