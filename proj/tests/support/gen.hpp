#pragma once

// Shared randomized-test support: small structural generators for IMP
// syntax plus independent oracles the properties are checked against.
// Everything is seeded explicitly so failures reproduce.

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "wise/ast.hpp"
#include "wise/concrete.hpp"
#include "wise/symbolic.hpp"

namespace testgen {

inline const std::vector<std::string> kVars = {"x", "y", "z"};

struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  long pick(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(eng);
  }

  const std::string& var() { return kVars[static_cast<std::size_t>(pick(0, 2))]; }
};

struct GenOptions {
  long lit_lo = -8;
  long lit_hi = 8;
};

inline wise::AexprPtr gen_aexpr(Rng& rng, int depth, const GenOptions& opt = {}) {
  if (depth <= 0 || rng.pick(0, 3) == 0) {
    if (rng.pick(0, 1) == 0) return wise::lit(rng.pick(opt.lit_lo, opt.lit_hi));
    return wise::var_ref(rng.var());
  }
  wise::AexprPtr l = gen_aexpr(rng, depth - 1, opt);
  wise::AexprPtr r = gen_aexpr(rng, depth - 1, opt);
  return rng.pick(0, 1) == 0 ? wise::add(l, r) : wise::sub(l, r);
}

inline wise::CmpOp gen_cmp_op(Rng& rng) {
  switch (rng.pick(0, 4)) {
    case 0: return wise::CmpOp::Eq;
    case 1: return wise::CmpOp::Le;
    case 2: return wise::CmpOp::Lt;
    case 3: return wise::CmpOp::Ge;
    default: return wise::CmpOp::Gt;
  }
}

inline wise::BexprPtr gen_bexpr(Rng& rng, int depth, const GenOptions& opt = {}) {
  if (depth <= 0 || rng.pick(0, 3) == 0) {
    switch (rng.pick(0, 3)) {
      case 0: return wise::tt();
      case 1: return wise::ff();
      default:
        return wise::cmp(gen_cmp_op(rng), gen_aexpr(rng, depth, opt),
                         gen_aexpr(rng, depth, opt));
    }
  }
  switch (rng.pick(0, 2)) {
    case 0: return wise::conj(gen_bexpr(rng, depth - 1, opt), gen_bexpr(rng, depth - 1, opt));
    case 1: return wise::disj(gen_bexpr(rng, depth - 1, opt), gen_bexpr(rng, depth - 1, opt));
    default: return wise::neg(gen_bexpr(rng, depth - 1, opt));
  }
}

// Loop-free except for bounded counting loops would complicate fuel
// reasoning, so generated statements avoid `while` by default.
inline wise::StmtPtr gen_stmt(Rng& rng, int depth, bool allow_while = false,
                              const GenOptions& opt = {}) {
  if (depth <= 0) {
    switch (rng.pick(0, 3)) {
      case 0: return wise::mk_skip();
      case 1: return wise::mk_fail();
      default: return wise::mk_assign(rng.var(), gen_aexpr(rng, 2, opt));
    }
  }
  switch (rng.pick(0, allow_while ? 4 : 3)) {
    case 0: return wise::mk_assign(rng.var(), gen_aexpr(rng, depth, opt));
    case 1:
      return wise::mk_seq(gen_stmt(rng, depth - 1, allow_while, opt),
                          gen_stmt(rng, depth - 1, allow_while, opt));
    case 2:
      return wise::mk_if(gen_bexpr(rng, depth - 1, opt),
                         gen_stmt(rng, depth - 1, allow_while, opt),
                         gen_stmt(rng, depth - 1, allow_while, opt));
    case 3: return rng.pick(0, 1) == 0 ? wise::mk_skip() : wise::mk_fail();
    default:
      // A loop whose guard strictly decreases x, so it always terminates.
      return wise::mk_while(
          wise::cmp(wise::CmpOp::Gt, wise::var_ref("x"), wise::lit(0)),
          wise::mk_seq(wise::mk_assign("x", wise::sub(wise::var_ref("x"), wise::lit(1))),
                       gen_stmt(rng, depth - 1, false, opt)));
  }
}

inline wise::Env gen_env(Rng& rng, long lo = -8, long hi = 8) {
  wise::Env env;
  for (const std::string& v : kVars) env = env.set(v, rng.pick(lo, hi));
  return env;
}

inline wise::SymStore gen_store(Rng& rng, const GenOptions& opt = {}) {
  wise::SymStore store;
  for (const std::string& v : kVars)
    if (rng.pick(0, 1) == 0) store = store.set(v, gen_aexpr(rng, 2, opt));
  return store;
}

// ---------------------------------------------------------------------------
// Independent oracles (separate recursions, no reuse of library evaluators).
// ---------------------------------------------------------------------------

inline wise::Int oracle_eval_aexpr(const wise::Aexpr& e, const wise::Env& v) {
  switch (e.node.index()) {
    case 0: return std::get<wise::IntLit>(e.node).value;
    case 1: return v.get(std::get<wise::Var>(e.node).name);
    case 2: {
      const auto& a = std::get<wise::Add>(e.node);
      return oracle_eval_aexpr(*a.left, v) + oracle_eval_aexpr(*a.right, v);
    }
    default: {
      const auto& s = std::get<wise::Sub>(e.node);
      return oracle_eval_aexpr(*s.left, v) - oracle_eval_aexpr(*s.right, v);
    }
  }
}

inline bool oracle_eval_bexpr(const wise::Bexpr& b, const wise::Env& v) {
  switch (b.node.index()) {
    case 0: return true;
    case 1: return false;
    case 2: {
      const auto& a = std::get<wise::And>(b.node);
      return oracle_eval_bexpr(*a.left, v) && oracle_eval_bexpr(*a.right, v);
    }
    case 3: {
      const auto& o = std::get<wise::Or>(b.node);
      return oracle_eval_bexpr(*o.left, v) || oracle_eval_bexpr(*o.right, v);
    }
    case 4: return !oracle_eval_bexpr(*std::get<wise::Not>(b.node).arg, v);
    default: {
      const auto& c = std::get<wise::Cmp>(b.node);
      const wise::Int l = oracle_eval_aexpr(*c.left, v);
      const wise::Int r = oracle_eval_aexpr(*c.right, v);
      switch (c.op) {
        case wise::CmpOp::Eq: return l == r;
        case wise::CmpOp::Le: return l <= r;
        case wise::CmpOp::Lt: return l < r;
        case wise::CmpOp::Ge: return l >= r;
        case wise::CmpOp::Gt: return l > r;
      }
      return false;
    }
  }
}

// A state is stuck iff the leftmost statement of its Seq spine is fail.
inline bool oracle_stuck(const wise::Stmt& s) {
  const wise::Stmt* cur = &s;
  while (const auto* seq = std::get_if<wise::Seq>(&cur->node)) cur = seq->first.get();
  return std::holds_alternative<wise::Fail>(cur->node);
}

// Concretization computed per variable, over the union of names that
// could matter: explicitly bound names plus those in v0.
inline wise::Env oracle_concretize(const wise::Env& v0, const wise::SymStore& s) {
  wise::Env out;
  for (const auto& [name, value] : v0.entries())
    out = out.set(name, oracle_eval_aexpr(*s.get(name), v0));
  for (const auto& [name, e] : s.entries()) out = out.set(name, oracle_eval_aexpr(*e, v0));
  return out;
}

// Brute-force satisfiability of phi over a cubic box on the given variables.
inline std::optional<wise::Env> exhaustive_sat(const wise::Bexpr& phi,
                                               const std::vector<std::string>& vars,
                                               long lo, long hi) {
  std::vector<long> point(vars.size(), lo);
  while (true) {
    wise::Env env;
    for (std::size_t i = 0; i < vars.size(); ++i) env = env.set(vars[i], point[i]);
    if (oracle_eval_bexpr(phi, env)) return env;
    std::size_t i = 0;
    for (; i < point.size(); ++i) {
      if (point[i] < hi) {
        ++point[i];
        break;
      }
      point[i] = lo;
    }
    if (i == point.size()) return std::nullopt;
  }
}

}  // namespace testgen
