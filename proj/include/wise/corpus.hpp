#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wise/concrete.hpp"
#include "wise/engine.hpp"

namespace wise {

struct CorpusEntry {
  std::string name;
  std::string source;         // IMP text of the correct program
  std::string mutant_source;  // IMP text after exactly one edit
  StmtPtr program;
  StmtPtr mutant;
  std::string mutant_edit;    // the one edit, documented
  std::vector<VarRange> box;  // bounded input ranges
  std::optional<Env> known_bad_input;  // triggers the mutant's bug
};

/// Loads the case-study programs (factorial, integer square root, gcd)
/// and their single-edit mutants from `.imp` files under `dir`.
std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir);

struct DifferentialReport {
  long total_inputs = 0;
  long yes_count = 0;
  std::vector<Env> disagreements;  // inputs where the two sides differ
  std::vector<Env> inconclusive;   // inputs where bad_input ran out of fuel

  bool agreed() const { return disagreements.empty() && inconclusive.empty(); }
  std::string to_text() const;
};

/// Cross-checks the symbolic bug finder against exhaustive concrete
/// execution: for every input in the box, bad_input says YES exactly when
/// some BugFound state in the stream prefix covers the input and simulates
/// the replayed stuck state. The box is conjoined into the initial path
/// condition and unsatisfiable branches are pruned.
DifferentialReport differential_check(const StmtPtr& p, const std::vector<VarRange>& box,
                                      long fuel, long prefix_len,
                                      long solver_budget = kDefaultSolverBudget);

}  // namespace wise
