#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mutdiff/detector.hpp"
#include "mutdiff/parser.hpp"
#include "mutdiff/pretty.hpp"
#include "mutdiff/report.hpp"
#include "mutdiff/smtlib.hpp"

namespace {

bool parse_domain(const std::string& text, mutdiff::DomainConfig& dom) {
  auto colon = text.find(':');
  if (colon == std::string::npos) return false;
  try {
    dom.int_min = std::stoll(text.substr(0, colon));
    dom.int_max = std::stoll(text.substr(colon + 1));
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

bool parse_ops(const std::string& text, std::set<mutdiff::MutationOperatorClass>& ops) {
  ops.clear();
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto c = mutdiff::operator_class_from_string(item);
    if (!c) return false;
    ops.insert(*c);
  }
  return !ops.empty();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mutdiff::PreconditionViolation("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mutdiff: constraint-based equivalent mutant detection for .mlang programs"};
  app.require_subcommand(1);

  // check -------------------------------------------------------------------
  auto* check = app.add_subcommand("check", "generate mutants, detect equivalents, report");
  std::vector<std::string> files;
  check->add_option("files", files, "program files (.mlang)")->required();
  int nd = 2, nd_max = 5, jobs = 1, max_blocking = 1024;
  double timeout_s = 300.0;
  std::string domain_text = "-128:127", ops_text;
  std::string suite_path, json_path, smt_dir;
  bool no_timings = false;
  check->add_option("--nd", nd, "initial nesting depth (default 2)");
  check->add_option("--nd-max", nd_max, "maximum nesting depth (default 5)");
  check->add_option("--timeout", timeout_s, "solver time budget per mutant, seconds (default 300)");
  check->add_option("--domain", domain_text, "integer value domain MIN:MAX (default -128:127)");
  check->add_option("--ops", ops_text, "operator classes, e.g. AOR,ROR,COR,UOI,UOD,CRP[,VRP]");
  check->add_option("--suite", suite_path, "JSON test suite for mutation-score evaluation");
  check->add_option("--json", json_path, "write the full JSON report to this file");
  check->add_option("--emit-smt", smt_dir, "write one .smt2 file per (mutant, nd) attempted");
  check->add_option("--jobs", jobs, "parallel mutant checks (default 1)");
  check->add_option("--max-blocking-rounds", max_blocking, "blocking clauses per depth (default 1024)");
  check->add_flag("--no-timings", no_timings, "zero wall_ms fields for reproducible reports");

  // convert -----------------------------------------------------------------
  auto* convert_cmd = app.add_subcommand("convert", "show the conversion pipeline stages");
  std::string convert_file, stage = "constraints";
  int convert_nd = 1;
  std::string convert_domain = "-128:127";
  convert_cmd->add_option("file", convert_file, "program file")->required();
  convert_cmd->add_option("--nd", convert_nd, "nesting depth (default 1)");
  convert_cmd->add_option("--stage", stage, "loopfree | ssa | constraints | smt");
  convert_cmd->add_option("--domain", convert_domain, "integer value domain MIN:MAX");

  // mutants -----------------------------------------------------------------
  auto* mutants_cmd = app.add_subcommand("mutants", "list generated mutants as JSON");
  std::string mutants_file, mutants_ops_text;
  mutants_cmd->add_option("file", mutants_file, "program file")->required();
  mutants_cmd->add_option("--ops", mutants_ops_text, "operator classes (default AOR..CRP)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      mutdiff::RunConfig cfg;
      cfg.detector.nd_initial = nd;
      cfg.detector.nd_max = nd_max;
      cfg.detector.max_blocking_rounds = max_blocking;
      cfg.detector.domain.solver_timeout =
          std::chrono::milliseconds(static_cast<std::int64_t>(timeout_s * 1000.0));
      if (!parse_domain(domain_text, cfg.detector.domain)) {
        std::cerr << "error: bad --domain, expected MIN:MAX\n";
        return 1;
      }
      if (!ops_text.empty() && !parse_ops(ops_text, cfg.operators)) {
        std::cerr << "error: bad --ops list\n";
        return 1;
      }
      cfg.jobs = jobs;
      cfg.no_timings = no_timings;
      if (!suite_path.empty()) cfg.suite_path = suite_path;
      if (!json_path.empty()) cfg.json_path = json_path;
      if (!smt_dir.empty()) cfg.emit_smt_dir = smt_dir;
      cfg.detector.validate();

      mutdiff::RunReport report = mutdiff::run_pipeline(files, cfg);
      for (const auto& err : report.file_errors) std::cerr << "error: " << err << "\n";
      std::cout << mutdiff::render_table(report);
      if (cfg.json_path) {
        std::ofstream out(*cfg.json_path);
        if (!out) {
          std::cerr << "error: cannot write '" << *cfg.json_path << "'\n";
          return 1;
        }
        out << mutdiff::report_to_json(report, cfg);
      }
      for (const auto& pr : report.programs)
        for (const auto& rec : pr.mutants)
          if (!rec.error.empty()) std::cerr << "error [" << pr.name << "/" << rec.id << "]: " << rec.error << "\n";
      return report.exit_code;
    }

    if (*convert_cmd) {
      mutdiff::DomainConfig dom;
      if (!parse_domain(convert_domain, dom)) {
        std::cerr << "error: bad --domain, expected MIN:MAX\n";
        return 1;
      }
      mutdiff::Program p = mutdiff::parse(read_file(convert_file));
      mutdiff::ConversionStages stages = mutdiff::convert_stages(p, convert_nd, dom);
      if (stage == "loopfree")
        std::cout << mutdiff::pretty_print(stages.lfp.program);
      else if (stage == "ssa")
        std::cout << mutdiff::pretty_print(stages.ssa);
      else if (stage == "constraints")
        std::cout << mutdiff::system_to_json(stages.cs) << "\n";
      else if (stage == "smt")
        std::cout << mutdiff::export_smtlib(stages.cs);
      else {
        std::cerr << "error: unknown --stage '" << stage << "'\n";
        return 1;
      }
      return 0;
    }

    if (*mutants_cmd) {
      auto ops = mutdiff::default_operator_classes();
      if (!mutants_ops_text.empty() && !parse_ops(mutants_ops_text, ops)) {
        std::cerr << "error: bad --ops list\n";
        return 1;
      }
      mutdiff::Program p = mutdiff::parse(read_file(mutants_file));
      std::cout << mutdiff::mutants_to_json(mutdiff::generate_mutants(p, ops)) << "\n";
      return 0;
    }
  } catch (const mutdiff::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
