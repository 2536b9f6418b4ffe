#include "wise/corpus.hpp"

#include <fstream>
#include <sstream>

#include "wise/parser.hpp"

namespace wise {

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read corpus file " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

CorpusEntry make_entry(const std::filesystem::path& dir, std::string name,
                       std::string mutant_edit, std::vector<VarRange> box,
                       Env known_bad_input) {
  CorpusEntry entry;
  entry.name = name;
  entry.source = read_file(dir / (name + ".imp"));
  entry.mutant_source = read_file(dir / (name + "_mutant.imp"));
  entry.program = parse_program(entry.source);
  entry.mutant = parse_program(entry.mutant_source);
  entry.mutant_edit = std::move(mutant_edit);
  entry.box = std::move(box);
  entry.known_bad_input = std::move(known_bad_input);
  return entry;
}

}  // namespace

std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  std::vector<CorpusEntry> entries;
  entries.push_back(make_entry(dir, "factorial", "g = 1 becomes g = 0",
                               {{"n", 0, 6}}, Env{{"n", 0}}));
  entries.push_back(make_entry(dir, "isqrt", "while _s > x do becomes while _s < x do",
                               {{"n", 0, 20}}, Env{{"n", 4}}));
  entries.push_back(make_entry(dir, "gcd", "y = y - x becomes y = y - x - 1",
                               {{"a", 0, 6}, {"b", 0, 6}}, Env{{"a", 2}, {"b", 5}}));
  return entries;
}

std::string DifferentialReport::to_text() const {
  std::ostringstream os;
  os << "inputs=" << total_inputs << " yes=" << yes_count
     << " disagreements=" << disagreements.size() << " inconclusive=" << inconclusive.size();
  for (const Env& env : disagreements) {
    os << "\ndisagree:";
    for (const auto& [k, v] : env.entries()) os << " " << k << "=" << v;
  }
  for (const Env& env : inconclusive) {
    os << "\ninconclusive:";
    for (const auto& [k, v] : env.entries()) os << " " << k << "=" << v;
  }
  return os.str();
}

namespace {

void enumerate_box(const std::vector<VarRange>& box, std::size_t index, Env& current,
                   std::vector<Env>& out) {
  if (index == box.size()) {
    out.push_back(current);
    return;
  }
  for (Int v = box[index].lo; v <= box[index].hi; ++v) {
    current = current.set(box[index].var, v);
    enumerate_box(box, index + 1, current, out);
  }
}

}  // namespace

DifferentialReport differential_check(const StmtPtr& p, const std::vector<VarRange>& box,
                                      long fuel, long prefix_len, long solver_budget) {
  EngineOptions options;
  options.prune = true;
  options.solver_budget = solver_budget;
  options.initial_path = bounds_condition(box);
  StatusStream stream = find_bugs(p, options);

  std::vector<SymState> bugs;
  for (long i = 0; i < prefix_len; ++i) {
    Status status = stream.next();
    if (status.kind == Status::Kind::Finished) break;
    if (status.kind == Status::Kind::BugFound) bugs.push_back(std::move(*status.state));
  }

  std::vector<Env> inputs;
  Env scratch;
  enumerate_box(box, 0, scratch, inputs);

  DifferentialReport report;
  report.total_inputs = static_cast<long>(inputs.size());
  for (const Env& v0 : inputs) {
    bool sym_yes = false;
    for (const SymState& bug : bugs) {
      if (!eval_bexpr(*bug.path, v0)) continue;
      const ExecOutcome replay = exec(ConcState{v0, p}, fuel);
      if (replay.kind == ExecOutcome::Kind::StuckAt && simulates(replay.state, v0, bug)) {
        sym_yes = true;
        break;
      }
    }
    switch (bad_input(p, v0, fuel)) {
      case BadInputVerdict::Yes:
        ++report.yes_count;
        if (!sym_yes) report.disagreements.push_back(v0);
        break;
      case BadInputVerdict::NoTerminated:
        if (sym_yes) report.disagreements.push_back(v0);
        break;
      case BadInputVerdict::Unknown:
        report.inconclusive.push_back(v0);
        break;
    }
  }
  return report;
}

}  // namespace wise
