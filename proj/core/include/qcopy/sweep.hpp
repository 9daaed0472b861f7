#pragma once

#include <string>
#include <vector>

#include "qcopy/copiers.hpp"

// Sweep engine behind the command line tool: one record per (f, copier)
// with every indicator, serialized deterministically so that repeated
// runs are byte-identical.

namespace qcopy {

// Baseline rows describing the uncopied signal carry this tag.
inline constexpr const char* kBaselineTag = "input";

struct SweepRecord {
  double f = 0.0;
  std::string copier;    // family tag, or "input" for baseline rows
  double i1 = 0.0;       // one-state copied information, bits
  double i1_ratio = 0.0; // i1 / i1_baseline(f); 1 by convention at f = 1
  double ih = 0.0;       // ultimate copied information, bits
  double f_local = 0.0;  // local fidelity between copy and original
  double q = 0.0;
  double r = 0.0;
  double q_h = 0.0;
};

enum class SweepFormat { csv, json };

struct SweepConfig {
  double f_min = 0.0;
  double f_max = 1.0;
  int steps = 101;
  std::vector<CopierFamily> copiers{kAllCopiers.begin(), kAllCopiers.end()};
  bool include_baselines = false;
  SweepFormat format = SweepFormat::csv;
};

// Full copier run for one (f, family) pair; family ultimate solves the
// design problem internally.
CopierOutput run_copier(CopierFamily family, const InputEnsemble& ens);

SweepRecord eval_record(double f, CopierFamily family);
SweepRecord baseline_record(double f);

// All records for the configured grid, rows sorted by f then copier
// tag. Rows for distinct f values are computed in parallel; assembly
// order is deterministic regardless of scheduling.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

// Fixed header "f,copier,i1,i1_ratio,ih,f_local,q,r,q_h"; numbers with
// 12 significant digits, locale-independent.
std::string to_csv(const std::vector<SweepRecord>& records);
std::string to_json(const std::vector<SweepRecord>& records);

// Inverse of to_csv; throws std::invalid_argument on malformed input.
std::vector<SweepRecord> parse_csv(const std::string& text);

// 12-significant-digit serialization used for every numeric field.
std::string format_number(double v);

}  // namespace qcopy
