#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tidykit/classifier.hpp"
#include "tidykit/group.hpp"
#include "tidykit/tidy.hpp"

namespace tidykit {

// Everything the suites need about one corpus member, computed once.
struct AnalyzedGroup {
  explicit AnalyzedGroup(Group gg) : g(std::move(gg)) {}

  Group g;
  std::vector<int> primes;
  bool solvable = false;
  TidinessReport oracle_all;
  TidinessReport oracle_pp;
  StructuralVerdict structural;
  // Set when the structural route threw instead of deciding; the suites
  // treat it as a loud failure, not a crash.
  bool structural_error = false;
  bool is_pq = false;
  PqClassification pq;  // meaningful only when is_pq
  int fitting_height = 0;             // solvable groups only
  int derived_length_mod_fitting = 0; // ditto
  std::int64_t analysis_ms = 0;
};

AnalyzedGroup analyze_group(const Group& g, bool all_witnesses = false);

// Analysis of a whole corpus, optionally fanned out over worker threads;
// results are in corpus order regardless of thread count.
std::vector<AnalyzedGroup> analyze_corpus(const std::vector<Group>& corpus,
                                          int threads = 1,
                                          bool all_witnesses = false);

// One row of a verification suite. Rows exist only for groups the suite's
// hypotheses reach (plus explicit vacuous rows where coverage is worth
// recording); `repro` is filled on failure.
struct SuiteRecord {
  int group_index = 0;
  std::string label;
  int order = 0;
  std::string inputs;
  std::string expected;
  std::string observed;
  bool pass = true;
  std::string repro;
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteRecord> records;
  int passed = 0;
  int failed = 0;
  std::string summary;
  std::int64_t ms = 0;
};

// The fifteen suite ids, in canonical order.
const std::vector<std::string>& suite_registry();

// Runs one suite over an analyzed corpus. Deterministic row order at any
// thread count. Errors: "unknown_suite".
SuiteReport run_suite(const std::vector<AnalyzedGroup>& corpus,
                      const std::string& suite_id, int threads = 1);

// --- serialization --------------------------------------------------------

// One JSON line for a group analysis (no trailing newline). Timing fields
// are zeroed unless with_timings, keeping default reports byte-identical.
std::string group_record_json(const AnalyzedGroup& a, bool with_timings);

// One JSON line for a suite row, carrying the group fields plus suite,
// inputs/expected/observed, pass, and repro on failure.
std::string suite_record_json(const AnalyzedGroup& a,
                              const SuiteReport& report,
                              const SuiteRecord& rec, bool with_timings);

// Human-readable analysis block for the analyze subcommand.
std::string analyze_table(const AnalyzedGroup& a);

// Human-readable one-suite summary with failing rows spelled out.
std::string suite_table(const SuiteReport& report, bool with_timings);

}  // namespace tidykit
