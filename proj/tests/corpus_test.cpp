#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <string>

#include "wise/corpus.hpp"
#include "wise/parser.hpp"

using namespace wise;

namespace {

const CorpusEntry& entry(const std::vector<CorpusEntry>& corpus, const std::string& name) {
  for (const CorpusEntry& e : corpus)
    if (e.name == name) return e;
  REQUIRE(false);
  throw std::logic_error("unreachable");
}

std::vector<Env> box_inputs(const std::vector<VarRange>& box) {
  std::vector<Env> out{Env{}};
  for (const VarRange& r : box) {
    std::vector<Env> next;
    for (const Env& base : out)
      for (Int v = r.lo; v <= r.hi; ++v) next.push_back(base.set(r.var, v));
    out = std::move(next);
  }
  return out;
}

constexpr long kFuel = 200000;

}  // namespace

TEST_CASE("the corpus loads three named entries with parseable sources") {
  const auto corpus = load_corpus(WISE_CORPUS_DIR);
  REQUIRE(corpus.size() == 3);
  for (const CorpusEntry& e : corpus) {
    CHECK(!e.source.empty());
    CHECK(!e.mutant_source.empty());
    CHECK(e.source != e.mutant_source);
    CHECK_FALSE(equal(e.program, e.mutant));
    CHECK(!e.box.empty());
    CHECK(!e.mutant_edit.empty());
    // The stored sources reparse to the stored programs.
    CHECK(equal(parse_program(e.source), e.program));
    CHECK(equal(parse_program(e.mutant_source), e.mutant));
  }
}

TEST_CASE("original programs are safe on every input in their boxes") {
  for (const CorpusEntry& e : load_corpus(WISE_CORPUS_DIR)) {
    CAPTURE(e.name);
    for (const Env& v0 : box_inputs(e.box))
      CHECK(bad_input(e.program, v0, kFuel) == BadInputVerdict::NoTerminated);
  }
}

TEST_CASE("each mutant fails on its recorded bad input") {
  for (const CorpusEntry& e : load_corpus(WISE_CORPUS_DIR)) {
    CAPTURE(e.name);
    REQUIRE(e.known_bad_input);
    CHECK(bad_input(e.mutant, *e.known_bad_input, kFuel) == BadInputVerdict::Yes);
  }
}

TEST_CASE("each mutant still terminates on the whole box") {
  for (const CorpusEntry& e : load_corpus(WISE_CORPUS_DIR)) {
    CAPTURE(e.name);
    for (const Env& v0 : box_inputs(e.box))
      CHECK(bad_input(e.mutant, v0, kFuel) != BadInputVerdict::Unknown);
  }
}

TEST_CASE("the gcd mutant distinguishes inputs") {
  // A useful mutant is wrong on some inputs and right on others.
  const auto corpus = load_corpus(WISE_CORPUS_DIR);
  const CorpusEntry& gcd = entry(corpus, "gcd");
  int bad = 0;
  int good = 0;
  for (const Env& v0 : box_inputs(gcd.box)) {
    switch (bad_input(gcd.mutant, v0, kFuel)) {
      case BadInputVerdict::Yes: ++bad; break;
      case BadInputVerdict::NoTerminated: ++good; break;
      case BadInputVerdict::Unknown: break;
    }
  }
  CHECK(bad > 0);
  CHECK(good > 0);
}

TEST_CASE("differential agreement on the branching example") {
  const StmtPtr p = parse_program("if x < 0 then fail else x = x - 1 fi");
  const DifferentialReport report = differential_check(p, {{"x", -3, 3}}, 1000, 1000);
  INFO(report.to_text());
  CHECK(report.agreed());
  CHECK(report.total_inputs == 7);
  CHECK(report.yes_count == 3);
}

TEST_CASE("differential agreement across the corpus") {
  for (const CorpusEntry& e : load_corpus(WISE_CORPUS_DIR)) {
    CAPTURE(e.name);
    for (const StmtPtr& p : {e.program, e.mutant}) {
      const DifferentialReport report = differential_check(p, e.box, kFuel, 60000);
      INFO(report.to_text());
      CHECK(report.agreed());
    }
  }
}
