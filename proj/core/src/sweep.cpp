#include "qcopy/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "qcopy/infomeasures.hpp"
#include "qcopy/optimizer.hpp"

namespace qcopy {

namespace {

void validate(const SweepConfig& config) {
  if (config.f_min < 0.0 || config.f_max > 1.0 ||
      config.f_min > config.f_max) {
    throw std::domain_error("sweep range must satisfy 0 <= f_min <= f_max <= 1");
  }
  if (config.steps < 2) {
    throw std::domain_error("sweep needs at least 2 steps");
  }
  if (config.copiers.empty() && !config.include_baselines) {
    throw std::domain_error("sweep selects no copiers and no baselines");
  }
}

SweepRecord make_record(double f, std::string tag, const CopierOutput& out,
                        double ih) {
  SweepRecord rec;
  rec.f = f;
  rec.copier = std::move(tag);
  rec.i1 = one_state_info(out);
  const double base = i1_baseline(f);
  rec.i1_ratio = base > 0.0 ? rec.i1 / base : 1.0;
  rec.ih = ih;
  rec.f_local = out.local_fidelity;
  rec.q = out.q;
  rec.r = out.r;
  rec.q_h = out.q_h;
  return rec;
}

}  // namespace

CopierOutput run_copier(CopierFamily family, const InputEnsemble& ens) {
  switch (family) {
    case CopierFamily::wz: return wz_copier(ens);
    case CopierFamily::ultimate:
      return ultimate_copier(ens, maximize_ih(ens.f));
    case CopierFamily::unentangled: return unentangled_copier(ens);
    case CopierFamily::global_fid: return global_fid_copier(ens);
    case CopierFamily::local_fid: return local_fid_copier(ens);
    case CopierFamily::uqcm: return uqcm_copier(ens);
  }
  throw std::domain_error("unknown copier family");
}

SweepRecord eval_record(double f, CopierFamily family) {
  const InputEnsemble ens = make_ensemble(f);
  const CopierOutput out = run_copier(family, ens);
  return make_record(f, to_string(family), out,
                     ultimate_info_from_bloch(out.r, std::min(out.q_h, out.r)));
}

SweepRecord baseline_record(double f) {
  const InputEnsemble ens = make_ensemble(f);
  // The uncopied signal is the identity "copier": pure inputs with
  // Bloch geometry q = sqrt(1-f), q_H = sqrt(f), r = 1.
  CopierOutput out;
  out.copy1 = ens.state1();
  out.copy2 = ens.state2();
  out.q = std::sqrt(std::max(0.0, 1.0 - f));
  out.r = 1.0;
  out.q_h = std::sqrt(f);
  out.local_fidelity = 1.0;
  SweepRecord rec = make_record(f, kBaselineTag, out, ih_baseline(f));
  rec.i1_ratio = 1.0;
  return rec;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
  validate(config);
  const int steps = config.steps;
  std::vector<double> grid(steps);
  for (int i = 0; i < steps; ++i) {
    grid[i] = config.f_min + (i * (config.f_max - config.f_min)) / (steps - 1);
  }

  const std::size_t per_f = config.copiers.size() +
                            (config.include_baselines ? 1u : 0u);
  std::vector<SweepRecord> records(grid.size() * per_f);

  // Static partition over f values; each slot is written by exactly one
  // worker, so assembly is deterministic.
  const unsigned hw = std::thread::hardware_concurrency();
  const unsigned workers =
      std::max(1u, std::min(hw == 0 ? 1u : hw, static_cast<unsigned>(steps)));
  const auto fill_rows = [&](unsigned worker) {
    for (std::size_t i = worker; i < grid.size(); i += workers) {
      std::size_t slot = i * per_f;
      for (CopierFamily family : config.copiers) {
        records[slot++] = eval_record(grid[i], family);
      }
      if (config.include_baselines) {
        records[slot] = baseline_record(grid[i]);
      }
    }
  };
  if (workers == 1) {
    fill_rows(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(fill_rows, w);
    for (auto& t : pool) t.join();
  }

  std::sort(records.begin(), records.end(),
            [](const SweepRecord& a, const SweepRecord& b) {
              if (a.f != b.f) return a.f < b.f;
              return a.copier < b.copier;
            });
  return records;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string to_csv(const std::vector<SweepRecord>& records) {
  std::string out = "f,copier,i1,i1_ratio,ih,f_local,q,r,q_h\n";
  for (const SweepRecord& rec : records) {
    out += format_number(rec.f);
    out += ',';
    out += rec.copier;
    for (double v : {rec.i1, rec.i1_ratio, rec.ih, rec.f_local, rec.q, rec.r,
                     rec.q_h}) {
      out += ',';
      out += format_number(v);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const std::vector<SweepRecord>& records) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const SweepRecord& rec = records[i];
    out += "  {\"f\": " + format_number(rec.f);
    out += ", \"copier\": \"" + rec.copier + "\"";
    out += ", \"i1\": " + format_number(rec.i1);
    out += ", \"i1_ratio\": " + format_number(rec.i1_ratio);
    out += ", \"ih\": " + format_number(rec.ih);
    out += ", \"f_local\": " + format_number(rec.f_local);
    out += ", \"q\": " + format_number(rec.q);
    out += ", \"r\": " + format_number(rec.r);
    out += ", \"q_h\": " + format_number(rec.q_h);
    out += i + 1 < records.size() ? "},\n" : "}\n";
  }
  out += "]\n";
  return out;
}

std::vector<SweepRecord> parse_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) ||
      line != "f,copier,i1,i1_ratio,ih,f_local,q,r,q_h") {
    throw std::invalid_argument("unrecognized sweep CSV header");
  }
  std::vector<SweepRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string field;
    std::array<std::string, 9> fields;
    for (int i = 0; i < 9; ++i) {
      if (!std::getline(row, field, ',')) {
        throw std::invalid_argument("sweep CSV row has too few fields");
      }
      fields[i] = field;
    }
    if (std::getline(row, field, ',')) {
      throw std::invalid_argument("sweep CSV row has too many fields");
    }
    SweepRecord rec;
    rec.f = std::stod(fields[0]);
    rec.copier = fields[1];
    rec.i1 = std::stod(fields[2]);
    rec.i1_ratio = std::stod(fields[3]);
    rec.ih = std::stod(fields[4]);
    rec.f_local = std::stod(fields[5]);
    rec.q = std::stod(fields[6]);
    rec.r = std::stod(fields[7]);
    rec.q_h = std::stod(fields[8]);
    records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace qcopy
