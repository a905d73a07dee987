#include "mutdiff/report.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "mutdiff/parser.hpp"
#include "mutdiff/smtlib.hpp"

namespace mutdiff {

double mutation_score(long killed, long total, long equivalent) {
  if (equivalent < 0 || equivalent > total)
    throw PreconditionViolation("equivalent count outside [0, total]");
  if (killed < 0 || killed > total - equivalent)
    throw PreconditionViolation("killed count outside [0, total - equivalent]");
  if (total == equivalent) return 1.0;
  return static_cast<double>(killed) / static_cast<double>(total - equivalent);
}

int loc_count(const std::string& source) {
  int loc = 0;
  std::istringstream in(source);
  std::string line;
  while (std::getline(in, line)) {
    std::size_t i = line.find_first_not_of(" \t\r");
    if (i == std::string::npos) continue;
    if (line.compare(i, 2, "//") == 0) continue;
    ++loc;
  }
  return loc;
}

namespace {

Value value_from_json(const nlohmann::json& j, const std::string& what) {
  if (j.is_boolean()) return Value(j.get<bool>());
  if (j.is_number_integer()) return Value(j.get<std::int64_t>());
  throw PreconditionViolation(what + " must be an integer or boolean");
}

VariableEnvironment env_from_json(const nlohmann::json& j, const std::string& what) {
  if (!j.is_object()) throw PreconditionViolation(what + " must be an object");
  VariableEnvironment env;
  for (const auto& [name, value] : j.items())
    env[name] = value_from_json(value, what + "." + name);
  return env;
}

nlohmann::ordered_json env_to_json(const VariableEnvironment& env) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [name, value] : env) {
    if (value.is_int())
      j[name] = value.as_int();
    else
      j[name] = value.as_bool();
  }
  return j;
}

}  // namespace

std::vector<TestCase> parse_suite(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw PreconditionViolation(std::string("suite file is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw PreconditionViolation("suite file must be a JSON array");
  std::vector<TestCase> out;
  for (const auto& item : doc) {
    TestCase tc;
    if (!item.contains("input"))
      throw PreconditionViolation("suite entry is missing \"input\"");
    tc.input = env_from_json(item.at("input"), "input");
    if (item.contains("expected")) tc.expected_output = env_from_json(item.at("expected"), "expected");
    out.push_back(std::move(tc));
  }
  return out;
}

std::vector<TestCase> load_suite(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionViolation("cannot open suite file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_suite(buf.str());
}

namespace {

/// A suite test distinguishes a mutant when both runs complete normally and
/// their output environments differ; failed runs carry no output environment
/// to compare, matching the detector's notion of a distinguishing input.
bool suite_kills(const Program& p, const Program& mutant, const std::vector<TestCase>& suite,
                 const DetectorConfig& cfg) {
  for (const auto& tc : suite) {
    ExecResult rp = interpret(p, tc.input, cfg.domain, cfg.max_steps);
    ExecResult rm = interpret(mutant, tc.input, cfg.domain, cfg.max_steps);
    if (rp.normal() && rm.normal() && rp.outputs != rm.outputs) return true;
  }
  return false;
}

}  // namespace

ProgramReport analyze_program(const Program& p, const std::string& path_label, int loc,
                              const RunConfig& cfg, const std::vector<TestCase>* suite) {
  ProgramReport report;
  report.name = p.name;
  report.path = path_label;
  report.loc = loc;

  std::vector<Mutant> mutants = generate_mutants(p, cfg.operators);
  report.no_mut = static_cast<long>(mutants.size());

  BatchHook hook;
  if (cfg.emit_smt_dir) {
    std::filesystem::create_directories(*cfg.emit_smt_dir);
    std::string dir = *cfg.emit_smt_dir;
    std::string program_name = p.name;
    hook = [dir, program_name](const Mutant& m, int nd, const ConstraintSystem& joint) {
      std::ostringstream name;
      name << dir << "/" << program_name << "_" << m.id << "_nd" << nd << ".smt2";
      std::ofstream out(name.str());
      out << export_smtlib(joint);
    };
  }

  std::vector<MutantVerdict> verdicts = batch_detect(p, mutants, cfg.detector, cfg.jobs, hook);

  long killed_count = 0;
  for (std::size_t i = 0; i < mutants.size(); ++i) {
    const Mutant& m = mutants[i];
    const MutantVerdict& v = verdicts[i];
    MutantRecord rec;
    rec.id = m.id;
    rec.operator_class = to_string(m.operator_class);
    rec.location = to_string(m.location);
    rec.original = m.original_fragment;
    rec.mutated = m.mutated_fragment;
    if (v.verdict) {
      rec.verdict = verdict_name(*v.verdict);
      rec.nd_reached = v.verdict->nd_reached;
      rec.wall_ms = cfg.no_timings ? 0 : v.verdict->wall_ms;
      if (v.verdict->equivalent()) {
        ++report.det_eqmut;
      } else if (v.verdict->not_equivalent()) {
        ++report.not_equal;
        const auto& ne = std::get<NotEquivalentVerdict>(v.verdict->v);
        rec.witness = ne.witness;
        rec.output_p = ne.output_p;
        rec.output_m = ne.output_m;
      } else {
        ++report.unknown;
      }
    } else {
      rec.verdict = "error";
      rec.error = v.error;
      ++report.errors;
      ++report.unknown;  // errors count as unresolved in the row arithmetic
      report.witness_validation_failed |= v.witness_validation_failed;
    }
    if (suite && v.verdict) {
      bool killed = suite_kills(p, m.program, *suite, cfg.detector);
      rec.killed = killed;
      if (killed) {
        if (v.verdict->equivalent())
          report.kill_conflicts.push_back(m.id);
        else
          ++killed_count;
      }
    }
    report.mutants.push_back(std::move(rec));
  }
  if (suite) {
    report.killed = killed_count;
    report.score = mutation_score(killed_count, report.no_mut, report.det_eqmut);
    report.score_vacuous = report.no_mut == report.det_eqmut;
  }
  return report;
}

RunReport run_pipeline(const std::vector<std::string>& paths, const RunConfig& cfg) {
  RunReport report;
  std::vector<TestCase> suite;
  bool have_suite = false;
  if (cfg.suite_path) {
    suite = load_suite(*cfg.suite_path);
    have_suite = true;
  }
  for (const auto& path : paths) {
    std::ifstream in(path);
    if (!in) {
      report.file_errors.push_back(path + ": cannot open file");
      continue;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string source = buf.str();
    Program p;
    try {
      p = parse(source);
    } catch (const Error& e) {
      report.file_errors.push_back(path + ": " + e.what());
      continue;
    }
    report.programs.push_back(
        analyze_program(p, path, loc_count(source), cfg, have_suite ? &suite : nullptr));
  }
  for (const auto& pr : report.programs)
    if (pr.witness_validation_failed) report.exit_code = 2;
  if (report.exit_code == 0 && !report.file_errors.empty()) report.exit_code = 1;
  return report;
}

std::string report_to_json(const RunReport& report, const RunConfig& cfg) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json config;
  config["nd_initial"] = cfg.detector.nd_initial;
  config["nd_max"] = cfg.detector.nd_max;
  config["timeout_ms"] = cfg.detector.domain.solver_timeout.count();
  config["domain"] = {cfg.detector.domain.int_min, cfg.detector.domain.int_max};
  config["max_blocking_rounds"] = cfg.detector.max_blocking_rounds;
  auto ops = nlohmann::ordered_json::array();
  for (const auto& c : cfg.operators) ops.push_back(to_string(c));
  config["operators"] = std::move(ops);
  config["jobs"] = cfg.jobs;
  j["config"] = std::move(config);

  auto programs = nlohmann::ordered_json::array();
  for (const auto& pr : report.programs) {
    nlohmann::ordered_json pj;
    pj["program"] = pr.name;
    pj["path"] = pr.path;
    pj["loc"] = pr.loc;
    auto mutants = nlohmann::ordered_json::array();
    for (const auto& rec : pr.mutants) {
      nlohmann::ordered_json mj;
      mj["mutant_id"] = rec.id;
      mj["operator_class"] = rec.operator_class;
      mj["location"] = rec.location;
      mj["original"] = rec.original;
      mj["mutated"] = rec.mutated;
      mj["verdict"] = rec.verdict;
      mj["nd_reached"] = rec.nd_reached;
      if (rec.witness) {
        nlohmann::ordered_json wj;
        wj["input"] = env_to_json(rec.witness->input);
        wj["output_p"] = env_to_json(rec.output_p);
        wj["output_m"] = env_to_json(rec.output_m);
        mj["witness"] = std::move(wj);
      }
      if (rec.killed.has_value()) mj["killed"] = *rec.killed;
      if (!rec.error.empty()) mj["error"] = rec.error;
      mj["wall_ms"] = rec.wall_ms;
      mutants.push_back(std::move(mj));
    }
    pj["mutants"] = std::move(mutants);
    nlohmann::ordered_json summary;
    summary["no_mut"] = pr.no_mut;
    summary["det_eqmut"] = pr.det_eqmut;
    summary["not_eq"] = pr.not_equal;
    summary["unknown"] = pr.unknown;
    summary["errors"] = pr.errors;
    summary["equivalent_fraction"] =
        pr.no_mut == 0 ? 0.0 : static_cast<double>(pr.det_eqmut) / static_cast<double>(pr.no_mut);
    if (pr.killed.has_value()) {
      summary["killed"] = *pr.killed;
      summary["score"] = *pr.score;
      summary["score_vacuous"] = pr.score_vacuous;
      auto conflicts = nlohmann::ordered_json::array();
      for (const auto& id : pr.kill_conflicts) conflicts.push_back(id);
      summary["kill_conflicts"] = std::move(conflicts);
    }
    pj["summary"] = std::move(summary);
    programs.push_back(std::move(pj));
  }
  j["programs"] = std::move(programs);
  auto errors = nlohmann::ordered_json::array();
  for (const auto& e : report.file_errors) errors.push_back(e);
  j["file_errors"] = std::move(errors);
  j["exit_code"] = report.exit_code;
  return j.dump(2) + "\n";
}

std::string render_table(const RunReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(28) << "Program" << std::right << std::setw(6) << "LOC"
      << std::setw(8) << "No_Mut" << std::setw(11) << "Det_EqMut" << std::setw(8) << "Not_Eq"
      << std::setw(9) << "Unknown" << std::setw(8) << "EqFrac" << "\n";
  long loc = 0, no_mut = 0, det = 0, noteq = 0, unknown = 0;
  for (const auto& pr : report.programs) {
    double frac = pr.no_mut == 0 ? 0.0 : static_cast<double>(pr.det_eqmut) / pr.no_mut;
    out << std::left << std::setw(28) << pr.name << std::right << std::setw(6) << pr.loc
        << std::setw(8) << pr.no_mut << std::setw(11) << pr.det_eqmut << std::setw(8) << pr.not_equal
        << std::setw(9) << pr.unknown << std::setw(8) << std::fixed << std::setprecision(2)
        << frac << "\n";
    loc += pr.loc;
    no_mut += pr.no_mut;
    det += pr.det_eqmut;
    noteq += pr.not_equal;
    unknown += pr.unknown;
    if (pr.score.has_value()) {
      out << "    killed " << *pr.killed << " of " << pr.no_mut - pr.det_eqmut
          << " non-equivalent; mutation score " << std::fixed << std::setprecision(4) << *pr.score;
      if (pr.score_vacuous) out << " (vacuous: all mutants equivalent)";
      out << "\n";
      for (const auto& id : pr.kill_conflicts)
        out << "    warning: suite kills " << id
            << " despite an Equivalent verdict (input exceeds the nd_max claim)\n";
    }
  }
  if (report.programs.size() > 1) {
    double frac = no_mut == 0 ? 0.0 : static_cast<double>(det) / no_mut;
    out << std::left << std::setw(28) << "TOTAL" << std::right << std::setw(6) << loc
        << std::setw(8) << no_mut << std::setw(11) << det << std::setw(8) << noteq << std::setw(9)
        << unknown << std::setw(8) << std::fixed << std::setprecision(2) << frac << "\n";
  }
  return out.str();
}

}  // namespace mutdiff
