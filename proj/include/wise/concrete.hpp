#pragma once

#include <map>
#include <optional>
#include <string>

#include "wise/ast.hpp"

namespace wise {

/// Total environment Vars -> Z; unmentioned variables default to 0.
class Env {
 public:
  Env() = default;
  Env(std::initializer_list<std::pair<const std::string, Int>> init) : vals_(init) {}

  Int get(const std::string& name) const {
    auto it = vals_.find(name);
    return it == vals_.end() ? Int(0) : it->second;
  }

  Env set(const std::string& name, Int value) const {
    Env out = *this;
    out.vals_[name] = std::move(value);
    return out;
  }

  const std::map<std::string, Int>& entries() const { return vals_; }

  // Extensional equality over the union of mentioned names.
  bool operator==(const Env& other) const {
    for (const auto& [k, v] : vals_)
      if (other.get(k) != v) return false;
    for (const auto& [k, v] : other.vals_)
      if (get(k) != v) return false;
    return true;
  }

 private:
  std::map<std::string, Int> vals_;
};

struct ConcState {
  Env env;
  StmtPtr pc;
};

Int eval_aexpr(const Aexpr& e, const Env& v);
bool eval_bexpr(const Bexpr& b, const Env& v);

/// One small step. Absent when no rule applies.
std::optional<ConcState> step(const ConcState& s);

struct ExecOutcome {
  enum class Kind { Terminated, StuckAt, OutOfFuel };
  Kind kind;
  ConcState state;  // final state; for Terminated the pc is skip
};

/// Applies step at most `fuel` times.
ExecOutcome exec(ConcState s, long fuel);

bool progress(const ConcState& s);
bool is_stuck_concrete(const ConcState& s);

enum class BadInputVerdict { Yes, NoTerminated, Unknown };

BadInputVerdict bad_input(const StmtPtr& p, const Env& v0, long fuel);

}  // namespace wise
