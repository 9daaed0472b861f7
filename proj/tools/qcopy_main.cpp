// qcopy: evaluate quantum copier information/fidelity indicators, run
// figure-reproduction sweeps over the input overlap f, and execute the
// self-verification suite.
//
// Exit codes: 0 success, 1 verification failure, 2 domain error,
// 3 I/O error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qcopy/copiers.hpp"
#include "qcopy/sweep.hpp"
#include "qcopy/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailure = 1;
constexpr int kExitDomainError = 2;
constexpr int kExitIoError = 3;

std::string record_json(const qcopy::SweepRecord& rec, bool compact) {
  const char* sep = compact ? ", " : ",\n  ";
  std::ostringstream out;
  out << (compact ? "{" : "{\n  ");
  out << "\"f\": " << qcopy::format_number(rec.f) << sep;
  out << "\"copier\": \"" << rec.copier << "\"" << sep;
  out << "\"i1\": " << qcopy::format_number(rec.i1) << sep;
  out << "\"i1_ratio\": " << qcopy::format_number(rec.i1_ratio) << sep;
  out << "\"ih\": " << qcopy::format_number(rec.ih) << sep;
  out << "\"f_local\": " << qcopy::format_number(rec.f_local) << sep;
  out << "\"q\": " << qcopy::format_number(rec.q) << sep;
  out << "\"r\": " << qcopy::format_number(rec.r) << sep;
  out << "\"q_h\": " << qcopy::format_number(rec.q_h);
  out << (compact ? "}" : "\n}");
  return out.str();
}

std::vector<qcopy::CopierFamily> parse_copier_list(const std::string& arg) {
  if (arg == "all") {
    return {qcopy::kAllCopiers.begin(), qcopy::kAllCopiers.end()};
  }
  std::vector<qcopy::CopierFamily> families;
  std::istringstream in(arg);
  std::string tag;
  while (std::getline(in, tag, ',')) {
    if (!tag.empty()) families.push_back(qcopy::parse_copier(tag));
  }
  if (families.empty()) {
    throw std::domain_error("copier list is empty");
  }
  return families;
}

int write_output(const std::string& path, const std::string& payload) {
  if (path == "-") {
    std::cout << payload;
    return kExitOk;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open output path: " << path << '\n';
    return kExitIoError;
  }
  out << payload;
  out.flush();
  if (!out) {
    std::cerr << "error: write failed: " << path << '\n';
    return kExitIoError;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Information transfer and fidelity indicators for qubit copiers"};
  app.require_subcommand(1);

  // eval
  double eval_f = 0.0;
  std::string eval_copier;
  bool eval_compact = false;
  CLI::App* eval = app.add_subcommand(
      "eval", "Evaluate one copier at one overlap f; prints a JSON object");
  eval->add_option("--f", eval_f, "input overlap f in [0, 1]")->required();
  eval->add_option("--copier", eval_copier,
                   "copier tag: wz, ultimate, unentangled, global_fid, "
                   "local_fid, uqcm")
      ->required();
  eval->add_flag("--json", eval_compact, "compact single-line JSON");

  // sweep
  double sweep_fmin = 0.0, sweep_fmax = 1.0;
  int sweep_steps = 101;
  std::string sweep_copiers = "all";
  bool sweep_baselines = false;
  std::string sweep_out = "-";
  std::string sweep_format = "csv";
  CLI::App* sweep = app.add_subcommand(
      "sweep", "Tabulate indicators over a uniform f grid (CSV or JSON)");
  sweep->add_option("--f-min", sweep_fmin, "grid start (default 0)");
  sweep->add_option("--f-max", sweep_fmax, "grid end (default 1)");
  sweep->add_option("--steps", sweep_steps, "grid points, >= 2 (default 101)");
  sweep->add_option("--copiers", sweep_copiers,
                    "comma-separated tags or 'all' (default all)");
  sweep->add_flag("--baselines", sweep_baselines,
                  "include uncopied-signal rows under the tag 'input'");
  sweep->add_option("--out", sweep_out, "output path, '-' for stdout");
  sweep->add_option("--format", sweep_format, "csv or json (default csv)")
      ->check(CLI::IsMember({"csv", "json"}));

  // verify
  int verify_steps = 21;
  CLI::App* verify = app.add_subcommand(
      "verify", "Run every module invariant over an f grid");
  verify->add_option("--steps", verify_steps, "grid points (default 21)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomainError;
  }

  try {
    if (eval->parsed()) {
      const qcopy::SweepRecord rec =
          qcopy::eval_record(eval_f, qcopy::parse_copier(eval_copier));
      std::cout << record_json(rec, eval_compact) << '\n';
      return kExitOk;
    }
    if (sweep->parsed()) {
      qcopy::SweepConfig config;
      config.f_min = sweep_fmin;
      config.f_max = sweep_fmax;
      config.steps = sweep_steps;
      config.copiers = parse_copier_list(sweep_copiers);
      config.include_baselines = sweep_baselines;
      config.format = sweep_format == "json" ? qcopy::SweepFormat::json
                                             : qcopy::SweepFormat::csv;
      const std::vector<qcopy::SweepRecord> records = qcopy::run_sweep(config);
      const std::string payload = config.format == qcopy::SweepFormat::json
                                      ? qcopy::to_json(records)
                                      : qcopy::to_csv(records);
      return write_output(sweep_out, payload);
    }
    if (verify->parsed()) {
      const std::vector<qcopy::CheckResult> results =
          qcopy::run_verify(verify_steps);
      std::cout << qcopy::format_report(results);
      return qcopy::all_passed(results) ? kExitOk : kExitVerifyFailure;
    }
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}
