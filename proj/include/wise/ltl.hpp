#pragma once

#include <functional>
#include <memory>
#include <span>
#include <stdexcept>

namespace wise::ltl {

enum class Verdict { Satisfied, Violated, Undetermined };

class EmptyPrefix : public std::invalid_argument {
 public:
  EmptyPrefix() : std::invalid_argument("LTL check requires a non-empty prefix") {}
};

/// Fragment used by the engine suites: atoms, globally, eventually,
/// implication. Atoms are arbitrary pure host predicates.
template <class T>
struct Formula {
  enum class Kind { Atom, Globally, Eventually, Implies };

  Kind kind;
  std::function<bool(const T&)> pred;  // Atom only
  std::shared_ptr<const Formula> left, right;
};

template <class T>
using FormulaPtr = std::shared_ptr<const Formula<T>>;

template <class T>
FormulaPtr<T> atom(std::function<bool(const T&)> pred) {
  return std::make_shared<Formula<T>>(
      Formula<T>{Formula<T>::Kind::Atom, std::move(pred), nullptr, nullptr});
}

template <class T>
FormulaPtr<T> globally(FormulaPtr<T> f) {
  return std::make_shared<Formula<T>>(
      Formula<T>{Formula<T>::Kind::Globally, nullptr, std::move(f), nullptr});
}

template <class T>
FormulaPtr<T> eventually(FormulaPtr<T> f) {
  return std::make_shared<Formula<T>>(
      Formula<T>{Formula<T>::Kind::Eventually, nullptr, std::move(f), nullptr});
}

template <class T>
FormulaPtr<T> implies(FormulaPtr<T> antecedent, FormulaPtr<T> consequent) {
  return std::make_shared<Formula<T>>(Formula<T>{Formula<T>::Kind::Implies, nullptr,
                                                 std::move(antecedent), std::move(consequent)});
}

/// Three-valued bounded check on a finite prefix of an infinite stream.
/// A finite prefix can refute a "globally" and witness an "eventually",
/// never the other way around; Undetermined means the prefix was too short.
template <class T>
Verdict check(std::span<const T> prefix, const Formula<T>& f) {
  if (prefix.empty()) throw EmptyPrefix();
  switch (f.kind) {
    case Formula<T>::Kind::Atom:
      return f.pred(prefix[0]) ? Verdict::Satisfied : Verdict::Violated;
    case Formula<T>::Kind::Eventually:
      for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (check(prefix.subspan(i), *f.left) == Verdict::Satisfied) return Verdict::Satisfied;
      }
      return Verdict::Undetermined;
    case Formula<T>::Kind::Globally:
      for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (check(prefix.subspan(i), *f.left) == Verdict::Violated) return Verdict::Violated;
      }
      return Verdict::Undetermined;
    case Formula<T>::Kind::Implies: {
      const Verdict antecedent = check(prefix, *f.left);
      if (antecedent == Verdict::Violated) return Verdict::Satisfied;
      const Verdict consequent = check(prefix, *f.right);
      if (antecedent == Verdict::Satisfied) return consequent;
      return consequent == Verdict::Satisfied ? Verdict::Satisfied : Verdict::Undetermined;
    }
  }
  return Verdict::Undetermined;
}

template <class T>
Verdict check(std::span<const T> prefix, const FormulaPtr<T>& f) {
  return check(prefix, *f);
}

}  // namespace wise::ltl
