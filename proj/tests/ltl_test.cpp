#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <span>
#include <vector>

#include "wise/ltl.hpp"

using wise::ltl::FormulaPtr;
using wise::ltl::Verdict;
using wise::ltl::check;

namespace {

// A tiny status alphabet standing in for the engine's stream events.
enum class Ev { None, Pending, BugFound };

FormulaPtr<Ev> is(Ev want) {
  return wise::ltl::atom<Ev>([want](const Ev& e) { return e == want; });
}

Verdict check_on(const std::vector<Ev>& prefix, const FormulaPtr<Ev>& f) {
  return check(std::span<const Ev>(prefix), f);
}

}  // namespace

TEST_CASE("an eventually is witnessed inside the prefix") {
  const std::vector<Ev> prefix{Ev::Pending, Ev::BugFound};
  CHECK(check_on(prefix, wise::ltl::eventually(is(Ev::BugFound))) == Verdict::Satisfied);
}

TEST_CASE("a globally-implication is refuted by a counterexample prefix") {
  // None followed by anything else violates "once None, always None".
  const std::vector<Ev> prefix{Ev::None, Ev::Pending};
  const FormulaPtr<Ev> f =
      wise::ltl::globally(wise::ltl::implies(is(Ev::None), wise::ltl::globally(is(Ev::None))));
  CHECK(check_on(prefix, f) == Verdict::Violated);
}

TEST_CASE("a finite prefix can never prove a globally") {
  const std::vector<Ev> prefix{Ev::Pending};
  CHECK(check_on(prefix, wise::ltl::globally(is(Ev::Pending))) == Verdict::Undetermined);
}

TEST_CASE("a finite prefix can never refute an eventually") {
  const std::vector<Ev> prefix{Ev::Pending, Ev::Pending, Ev::Pending};
  CHECK(check_on(prefix, wise::ltl::eventually(is(Ev::BugFound))) == Verdict::Undetermined);
}

TEST_CASE("atoms decide on the first element") {
  const std::vector<Ev> prefix{Ev::BugFound, Ev::None};
  CHECK(check_on(prefix, is(Ev::BugFound)) == Verdict::Satisfied);
  CHECK(check_on(prefix, is(Ev::None)) == Verdict::Violated);
}

TEST_CASE("implication lifts three-valued") {
  const std::vector<Ev> one{Ev::Pending};
  // Violated antecedent: vacuously satisfied.
  CHECK(check_on(one, wise::ltl::implies(is(Ev::None), is(Ev::BugFound))) ==
        Verdict::Satisfied);
  // Satisfied antecedent: the consequent's verdict.
  CHECK(check_on(one, wise::ltl::implies(is(Ev::Pending), is(Ev::Pending))) ==
        Verdict::Satisfied);
  CHECK(check_on(one, wise::ltl::implies(is(Ev::Pending), is(Ev::None))) == Verdict::Violated);
  // Undetermined antecedent stays open unless the consequent already holds.
  const FormulaPtr<Ev> open = wise::ltl::globally(is(Ev::Pending));
  CHECK(check_on(one, wise::ltl::implies(open, is(Ev::Pending))) == Verdict::Satisfied);
  CHECK(check_on(one, wise::ltl::implies(open, is(Ev::None))) == Verdict::Undetermined);
}

TEST_CASE("the empty prefix is rejected") {
  const std::vector<Ev> empty;
  CHECK_THROWS_AS(check_on(empty, is(Ev::Pending)), wise::ltl::EmptyPrefix);
}

TEST_CASE("extending a prefix only resolves, never flips") {
  std::mt19937_64 eng(71230);
  std::uniform_int_distribution<int> ev(0, 2);
  std::uniform_int_distribution<int> len(1, 12);
  std::uniform_int_distribution<int> extra(1, 6);
  std::uniform_int_distribution<int> shape(0, 4);

  const auto random_formula = [&](auto&& self, int depth) -> FormulaPtr<Ev> {
    if (depth <= 0) return is(static_cast<Ev>(ev(eng)));
    switch (shape(eng)) {
      case 0: return wise::ltl::globally(self(self, depth - 1));
      case 1: return wise::ltl::eventually(self(self, depth - 1));
      case 2: return wise::ltl::implies(self(self, depth - 1), self(self, depth - 1));
      default: return is(static_cast<Ev>(ev(eng)));
    }
  };

  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Ev> prefix;
    for (int i = 0, n = len(eng); i < n; ++i) prefix.push_back(static_cast<Ev>(ev(eng)));
    const FormulaPtr<Ev> f = random_formula(random_formula, 3);
    const Verdict before = check_on(prefix, f);
    for (int i = 0, n = extra(eng); i < n; ++i) prefix.push_back(static_cast<Ev>(ev(eng)));
    const Verdict after = check_on(prefix, f);
    if (before != Verdict::Undetermined) CHECK(after == before);
  }
}
