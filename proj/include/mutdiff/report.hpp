#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mutdiff/detector.hpp"
#include "mutdiff/mutation.hpp"

namespace mutdiff {

/// killed / (total - equivalent). When every mutant is equivalent the suite
/// is vacuously perfect and the score is 1 (callers flag that case).
/// Preconditions: 0 <= equivalent <= total, 0 <= killed <= total - equivalent.
double mutation_score(long killed, long total, long equivalent);

/// Non-blank, non-comment source lines.
int loc_count(const std::string& source);

/// Test-suite file: JSON list of {"input": {var: value}, "expected": {var: value}}.
std::vector<TestCase> parse_suite(const std::string& json_text);
std::vector<TestCase> load_suite(const std::string& path);

struct RunConfig {
  DetectorConfig detector;
  std::set<MutationOperatorClass> operators = default_operator_classes();
  int jobs = 1;
  std::optional<std::string> suite_path;
  std::optional<std::string> json_path;
  std::optional<std::string> emit_smt_dir;
  bool no_timings = false;  // zero out wall_ms for byte-identical reports
};

struct MutantRecord {
  std::string id;
  std::string operator_class;
  std::string location;
  std::string original;
  std::string mutated;
  std::string verdict;  // equivalent | not_equivalent | unknown_* | error
  int nd_reached = 0;
  std::int64_t wall_ms = 0;
  std::optional<TestCase> witness;
  VariableEnvironment output_p;
  VariableEnvironment output_m;
  std::optional<bool> killed;
  std::string error;
};

struct ProgramReport {
  std::string name;
  std::string path;
  int loc = 0;
  long no_mut = 0;
  long det_eqmut = 0;
  long not_equal = 0;
  long unknown = 0;  // includes per-mutant errors, reported separately below
  long errors = 0;
  bool witness_validation_failed = false;
  std::vector<MutantRecord> mutants;
  std::optional<long> killed;
  std::optional<double> score;
  bool score_vacuous = false;
  /// Mutants a suite test kills despite an Equivalent verdict. With the
  /// bounded claim this can only happen when the killing input needs more
  /// loop iterations than nd_max covers; it is surfaced, not asserted away.
  std::vector<std::string> kill_conflicts;
};

struct RunReport {
  std::vector<ProgramReport> programs;
  std::vector<std::string> file_errors;
  int exit_code = 0;
};

/// Analyzes one already-parsed program end to end: mutants, verdicts,
/// optional kill evaluation against a suite.
ProgramReport analyze_program(const Program& p, const std::string& path_label, int loc,
                              const RunConfig& cfg,
                              const std::vector<TestCase>* suite = nullptr);

/// Full CLI pipeline over source files. Exit code: 0 success, 1 any file or
/// parse error, 2 any witness validation failure.
RunReport run_pipeline(const std::vector<std::string>& paths, const RunConfig& cfg);

std::string report_to_json(const RunReport& report, const RunConfig& cfg);
std::string render_table(const RunReport& report);

}  // namespace mutdiff
