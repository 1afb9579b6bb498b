#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "offsetdeg/formulas.hpp"

namespace offsetdeg {

struct CorpusEntry {
  std::string name;
  std::string implicit_src;
  std::optional<std::array<std::string, 3>> param_src;  // X, Y, W
  std::map<std::string, std::string> substitutions;     // param -> rational
  int expected_delta1 = 0;
  int expected_delta2 = 0;
  int expected_delta_d = 0;
  int total_degree = 0;  // carried for reference, never computed
  bool source_ambiguity = false;
};

enum class Status { pass, warn, fail };

struct RunRecord {
  std::string name;
  DegreeReport report;
  std::optional<DegreeReport> parametric_report;
  Status delta1 = Status::fail;
  Status delta2 = Status::fail;
  Status delta_d = Status::fail;
  bool ok = false;          // no FAIL anywhere (WARN allowed)
  std::string error;        // set when the entry aborted
};

/// Loads the fixture file (a JSON array of CorpusEntry); throws
/// FixtureError on unreadable or schema-invalid input.
std::vector<CorpusEntry> load_corpus(const std::string& path);

struct CorpusOptions {
  int parallel = 1;
  std::string filter;       // empty = all entries
  bool symbolic = false;    // keep parameters as ring variables
  ResultantAlgo algo = ResultantAlgo::prs;
};

/// Runs the entries (optionally concurrently) and returns records in
/// stable name order. Mismatches on entries flagged source_ambiguity are
/// WARN, all others FAIL; a parametrized entry additionally requires the
/// parametric report to agree with the implicit one.
std::vector<RunRecord> run_corpus(const std::vector<CorpusEntry>& entries,
                                  const CorpusOptions& opt);

/// Runs a single entry; error conditions are captured in the record.
RunRecord run_entry(const CorpusEntry& e, const CorpusOptions& opt);

}  // namespace offsetdeg
