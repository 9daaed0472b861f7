#include "qcopy/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qcopy/copiers.hpp"
#include "qcopy/infomeasures.hpp"
#include "qcopy/optimizer.hpp"
#include "qcopy/sweep.hpp"

namespace qcopy {

namespace {

struct Vec3 {
  double x, y, z;
};

Vec3 to_vec(const BlochVector& b) { return {b.x, b.y, b.z}; }
double vnorm(const Vec3& a) {
  return std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z);
}

// Everything the grid checks need for one f value, computed once.
struct GridPoint {
  double f = 0.0;
  InputEnsemble ens;
  UltimateCopierSolution sol;
  std::array<CopierOutput, 6> outputs;  // indexed like kAllCopiers
};

std::vector<GridPoint> build_grid(int steps) {
  std::vector<GridPoint> grid(steps);
  for (int i = 0; i < steps; ++i) {
    GridPoint& gp = grid[i];
    gp.f = static_cast<double>(i) / (steps - 1);
    gp.ens = make_ensemble(gp.f);
    gp.sol = maximize_ih(gp.f);
    for (std::size_t k = 0; k < kAllCopiers.size(); ++k) {
      gp.outputs[k] = kAllCopiers[k] == CopierFamily::ultimate
                          ? ultimate_copier(gp.ens, gp.sol)
                          : run_copier(kAllCopiers[k], gp.ens);
    }
  }
  return grid;
}

const CopierOutput& output_of(const GridPoint& gp, CopierFamily family) {
  for (std::size_t k = 0; k < kAllCopiers.size(); ++k) {
    if (kAllCopiers[k] == family) return gp.outputs[k];
  }
  throw std::logic_error("unknown family");
}

// Accumulates the worst residual seen and where.
class Worst {
 public:
  void update(double residual, double f, const std::string& where) {
    if (residual > residual_) {
      residual_ = residual;
      f_ = f;
      where_ = where;
    }
  }
  CheckResult result(const std::string& name, double tolerance) const {
    CheckResult res;
    res.name = name;
    res.passed = residual_ <= tolerance;
    res.detail = "max residual " + format_number(residual_) + " at f=" +
                 format_number(f_) + (where_.empty() ? "" : " (" + where_ + ")") +
                 ", tolerance " + format_number(tolerance);
    return res;
  }

 private:
  double residual_ = 0.0;
  double f_ = 0.0;
  std::string where_;
};

double max_entry_diff(const DensityMatrix2& a, const DensityMatrix2& b) {
  double worst = 0.0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      worst = std::max(worst, std::abs(a.entry(i, j) - b.entry(i, j)));
    }
  }
  return worst;
}

// Smaller singular value of the 2x2 amplitude matrix reshaped from a
// joint state; zero certifies a product state.
double second_singular_value(const JointPureState& s) {
  const complexd m00 = s.amp(0), m01 = s.amp(1), m10 = s.amp(2), m11 = s.amp(3);
  const double t = std::norm(m00) + std::norm(m01) + std::norm(m10) +
                   std::norm(m11);
  const double d = std::norm(m00 * m11 - m01 * m10);
  const double disc = std::sqrt(std::max(0.0, t * t - 4.0 * d));
  return std::sqrt(std::max(0.0, 0.5 * (t - disc)));
}

CheckResult check_copier_bloch_consistency(const std::vector<GridPoint>& grid) {
  Worst worst;
  for (const GridPoint& gp : grid) {
    for (std::size_t k = 0; k < kAllCopiers.size(); ++k) {
      const CopierOutput& out = gp.outputs[k];
      const std::string tag = to_string(kAllCopiers[k]);
      const Vec3 v1 = to_vec(bloch_from_state(out.copy1));
      const Vec3 v2 = to_vec(bloch_from_state(out.copy2));
      const Vec3 diff{v1.x - v2.x, v1.y - v2.y, v1.z - v2.z};
      const Vec3 sum{v1.x + v2.x, v1.y + v2.y, v1.z + v2.z};
      worst.update(std::abs(0.5 * vnorm(diff) - out.q), gp.f, tag);
      worst.update(std::abs(0.5 * vnorm(sum) - out.q_h), gp.f, tag);
      worst.update(std::abs(vnorm(v1) - vnorm(v2)), gp.f, tag);
      worst.update(out.q * out.q + out.q_h * out.q_h - out.r * out.r, gp.f, tag);
    }
  }
  return worst.result("copier-bloch-consistency", 1e-12);
}

CheckResult check_joint_unitarity(const std::vector<GridPoint>& grid) {
  Worst worst;
  for (const GridPoint& gp : grid) {
    for (CopierFamily family : {CopierFamily::wz, CopierFamily::ultimate,
                                CopierFamily::unentangled}) {
      const CopierOutput& out = output_of(gp, family);
      worst.update(std::abs(overlap_sq(*out.joint1, *out.joint2) - gp.f), gp.f,
                   to_string(family));
    }
  }
  return worst.result("joint-unitarity", 1e-12);
}

CheckResult check_partial_trace_symmetry(const std::vector<GridPoint>& grid) {
  Worst worst;
  for (const GridPoint& gp : grid) {
    for (CopierFamily family : {CopierFamily::wz, CopierFamily::ultimate,
                                CopierFamily::unentangled}) {
      const CopierOutput& out = output_of(gp, family);
      const std::string tag = to_string(family);
      worst.update(
          max_entry_diff(partial_trace(*out.joint1, Subsystem::first), out.copy1),
          gp.f, tag);
      worst.update(
          max_entry_diff(partial_trace(*out.joint1, Subsystem::second), out.copy1),
          gp.f, tag);
      worst.update(
          max_entry_diff(partial_trace(*out.joint2, Subsystem::first), out.copy2),
          gp.f, tag);
      worst.update(
          max_entry_diff(partial_trace(*out.joint2, Subsystem::second), out.copy2),
          gp.f, tag);
    }
  }
  return worst.result("joint-partial-trace-symmetry", 1e-10);
}

CheckResult check_unentangled_product(const std::vector<GridPoint>& grid) {
  Worst worst;
  for (const GridPoint& gp : grid) {
    const CopierOutput& out = output_of(gp, CopierFamily::unentangled);
    worst.update(second_singular_value(*out.joint1), gp.f, "joint1");
    worst.update(second_singular_value(*out.joint2), gp.f, "joint2");
  }
  return worst.result("unentangled-product-purity", 1e-12);
}

CheckResult check_local_fidelity(const std::vector<GridPoint>& grid) {
  Worst worst;
  for (const GridPoint& gp : grid) {
    for (std::size_t k = 0; k < kAllCopiers.size(); ++k) {
      const CopierOutput& out = gp.outputs[k];
      const std::string tag = to_string(kAllCopiers[k]);
      worst.update(
          std::abs(out.local_fidelity - fidelity_mixed(gp.ens.state1(), out.copy1)),
          gp.f, tag);
      worst.update(
          std::abs(out.local_fidelity - fidelity_mixed(gp.ens.state2(), out.copy2)),
          gp.f, tag);
    }
  }
  return worst.result("local-fidelity-closed-form", 1e-10);
}

CheckResult check_uqcm_constant(const std::vector<GridPoint>& grid) {
  Worst worst;
  for (const GridPoint& gp : grid) {
    worst.update(std::abs(output_of(gp, CopierFamily::uqcm).local_fidelity -
                          5.0 / 6.0),
                 gp.f, "");
  }
  return worst.result("uqcm-constant-fidelity", 1e-12);
}

CheckResult check_scan_matches_analytic(const std::vector<GridPoint>& grid) {
  Worst worst;
  for (const GridPoint& gp : grid) {
    for (std::size_t k = 0; k < kAllCopiers.size(); ++k) {
      const CopierOutput& out = gp.outputs[k];
      const double scanned = accessible_info_scan(out.copy1, out.copy2);
      worst.update(std::abs(scanned - binary_info_from_q(out.q)), gp.f,
                   to_string(kAllCopiers[k]));
    }
  }
  return worst.result("one-state-info-scan", 1e-6);
}

CheckResult check_holevo_dominates_scan(const std::vector<GridPoint>& grid) {
  Worst worst;
  for (const GridPoint& gp : grid) {
    for (std::size_t k = 0; k < kAllCopiers.size(); ++k) {
      const CopierOutput& out = gp.outputs[k];
      const double scanned = accessible_info_scan(out.copy1, out.copy2);
      const double holevo = holevo_two_state(out.copy1, out.copy2, 0.5);
      worst.update(scanned - holevo, gp.f, to_string(kAllCopiers[k]));
    }
  }
  return worst.result("holevo-dominates-scan", 1e-9);
}

CheckResult check_wz_holevo_equality(const std::vector<GridPoint>& grid) {
  Worst worst;
  for (const GridPoint& gp : grid) {
    const CopierOutput& out = output_of(gp, CopierFamily::wz);
    worst.update(std::abs(one_state_info(out) -
                          holevo_two_state(out.copy1, out.copy2, 0.5)),
                 gp.f, "");
  }
  return worst.result("wz-holevo-equality", 1e-12);
}

CheckResult check_root_residuals(const std::vector<GridPoint>& grid) {
  Worst worst;
  for (const GridPoint& gp : grid) {
    if (gp.f <= 0.0 || gp.f >= 1.0) continue;
    const double lo = std::sqrt(1.0 - gp.f);
    for (int j = 0; j <= 20; ++j) {
      const double r = lo + j * (1.0 - lo) / 20.0;
      try {
        const double root = cos_phi_of_r(gp.f, r);
        worst.update(quartic_residual(quartic_coeffs(gp.f, r), root), gp.f,
                     "r=" + format_number(r));
      } catch (const InfeasibleRootError&) {
        // No admissible root at this r; nothing to validate.
      }
    }
  }
  return worst.result("root-residual", 1e-8);
}

CheckResult check_wz_regime_root(const std::vector<GridPoint>& grid) {
  Worst worst;
  for (const GridPoint& gp : grid) {
    if (gp.f <= 0.0 || gp.f > 0.19) continue;
    worst.update(std::abs(cos_phi_of_r(gp.f, std::sqrt(1.0 - gp.f)) + 1.0),
                 gp.f, "");
  }
  return worst.result("wz-regime-root-identity", 1e-8);
}

CheckResult check_feasibility(const std::vector<GridPoint>& grid) {
  Worst worst;
  for (const GridPoint& gp : grid) {
    if (gp.f <= 0.0 || gp.f >= 1.0) continue;
    try {
      const FeasibilityWitness w = feasibility_check(gp.f, gp.sol);
      worst.update(std::max(w.residual_f, w.residual_n), gp.f, "");
    } catch (const std::exception& e) {
      worst.update(1.0, gp.f, e.what());
    }
  }
  return worst.result("feasibility-witness", 1e-8);
}

CheckResult check_optimizer_dense_bound(const std::vector<GridPoint>& grid) {
  // Brute-force r grid must not beat the refined optimizer result.
  Worst worst;
  constexpr int kDense = 2001;
  for (const GridPoint& gp : grid) {
    if (gp.f <= 0.0 || gp.f >= 1.0) continue;
    const double lo = std::sqrt(1.0 - gp.f);
    for (int j = 0; j < kDense; ++j) {
      const double r = lo + (j * (1.0 - lo)) / (kDense - 1);
      try {
        const double cphi = cos_phi_of_r(gp.f, r);
        const double q_h = r * std::sqrt(std::max(0.0, 0.5 * (1.0 + cphi)));
        const double value = ultimate_info_from_bloch(r, std::min(q_h, r));
        worst.update(value - gp.sol.iH, gp.f, "r=" + format_number(r));
      } catch (const InfeasibleRootError&) {
      }
    }
  }
  return worst.result("optimizer-dense-grid-bound", 1e-9);
}

CheckResult check_basis_orthogonality() {
  Worst worst;
  for (int j = 1; j <= 64; ++j) {
    const double phi = j * 3.14159265358979323846 / 64.0;
    const BasisMatrix basis = build_basis_matrix(phi);
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        double dot = 0.0;
        for (int k = 0; k < 4; ++k) dot += basis[a][k] * basis[b][k];
        worst.update(std::abs(dot - (a == b ? 1.0 : 0.0)), phi,
                     "row pair " + std::to_string(a) + "," + std::to_string(b));
      }
    }
  }
  return worst.result("basis-orthogonality", 1e-12);
}

CheckResult check_ih_monotonicity() {
  // Holevo information of the symmetric pair must increase with r and
  // decrease with q_H over the admissible wedge q_H <= r.
  Worst worst;
  constexpr int kN = 64;
  constexpr double step = 1.0 / kN;
  for (int i = 0; i <= kN; ++i) {
    const double r = i * step;
    for (int j = 0; j < i; ++j) {
      const double qh = j * step;
      const double base = ultimate_info_from_bloch(r, qh);
      if (i < kN) {
        worst.update(base - ultimate_info_from_bloch(r + step, qh), r,
                     "r-direction");
      }
      worst.update(ultimate_info_from_bloch(r, qh + step) - base, r,
                   "qh-direction");
    }
  }
  return worst.result("ih-bloch-monotonicity", 1e-12);
}

CheckResult check_info_orderings(const std::vector<GridPoint>& grid) {
  Worst worst;
  for (const GridPoint& gp : grid) {
    const double ih_base = ih_baseline(gp.f);
    const CopierOutput& ult = output_of(gp, CopierFamily::ultimate);
    const CopierOutput& wz = output_of(gp, CopierFamily::wz);
    const CopierOutput& lf = output_of(gp, CopierFamily::local_fid);
    const double ih_ult = ultimate_info_from_bloch(ult.r, std::min(ult.q_h, ult.r));
    for (std::size_t k = 0; k < kAllCopiers.size(); ++k) {
      const CopierOutput& out = gp.outputs[k];
      const std::string tag = to_string(kAllCopiers[k]);
      const double ih = ultimate_info_from_bloch(out.r, std::min(out.q_h, out.r));
      worst.update(ih - ih_ult, gp.f, "ih(" + tag + ") > ih(ultimate)");
      worst.update(ih - ih_base, gp.f, "ih(" + tag + ") > baseline");
      worst.update(one_state_info(out) - one_state_info(wz), gp.f,
                   "i1(" + tag + ") > i1(wz)");
      worst.update(out.local_fidelity - lf.local_fidelity, gp.f,
                   "f_local(" + tag + ") > f_local(local_fid)");
    }
  }
  return worst.result("info-orderings", 1e-9);
}

CheckResult check_wz_losslessness(const std::vector<GridPoint>& grid) {
  Worst worst;
  for (const GridPoint& gp : grid) {
    worst.update(std::abs(one_state_info(output_of(gp, CopierFamily::wz)) -
                          i1_baseline(gp.f)),
                 gp.f, "");
  }
  return worst.result("wz-losslessness", 1e-12);
}

CheckResult check_bloch_roundtrip() {
  Worst worst;
  std::mt19937 rng(20260808);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int i = 0; i < 256; ++i) {
    Vec3 v{unit(rng), unit(rng), unit(rng)};
    const double n = vnorm(v);
    if (n > 1.0) {
      v = {v.x / n, v.y / n, v.z / n};
    }
    const BlochVector in{v.x, v.y, v.z};
    const BlochVector back = bloch_from_state(state_from_bloch(in));
    worst.update(std::max({std::abs(back.x - v.x), std::abs(back.y - v.y),
                           std::abs(back.z - v.z)}),
                 0.0, "sample " + std::to_string(i));
  }
  return worst.result("bloch-roundtrip", 1e-12);
}

CheckResult check_entropy_unitary_invariance() {
  Worst worst;
  std::mt19937 rng(20260809);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  for (int i = 0; i < 128; ++i) {
    Vec3 v{normal(rng), normal(rng), normal(rng)};
    const double n = vnorm(v);
    const double scale = n > 0 ? radius(rng) / n : 0.0;
    const DensityMatrix2 rho =
        state_from_bloch({v.x * scale, v.y * scale, v.z * scale});
    // Random unitary: first column a random normalized complex vector.
    complexd u0(normal(rng), normal(rng));
    complexd u1(normal(rng), normal(rng));
    const double un = std::sqrt(std::norm(u0) + std::norm(u1));
    u0 /= un;
    u1 /= un;
    const complexd m[2][2] = {{u0, -std::conj(u1)}, {u1, std::conj(u0)}};
    complexd rot[2][2] = {{0, 0}, {0, 0}};
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        for (int p = 0; p < 2; ++p) {
          for (int qi = 0; qi < 2; ++qi) {
            rot[a][b] += m[a][p] * rho.entry(p, qi) * std::conj(m[b][qi]);
          }
        }
      }
    }
    const DensityMatrix2 conj =
        DensityMatrix2::from_entries(rot[0][0], rot[0][1], rot[1][0], rot[1][1]);
    worst.update(std::abs(von_neumann_entropy(conj) - von_neumann_entropy(rho)),
                 0.0, "sample " + std::to_string(i));
  }
  return worst.result("entropy-unitary-invariance", 1e-10);
}

CheckResult check_fidelity_pure_closed_form() {
  Worst worst;
  std::mt19937 rng(20260810);
  std::normal_distribution<double> normal(0.0, 1.0);
  const auto random_pure = [&] {
    complexd a(normal(rng), normal(rng));
    complexd b(normal(rng), normal(rng));
    const double n = std::sqrt(std::norm(a) + std::norm(b));
    return std::pair{a / n, b / n};
  };
  for (int i = 0; i < 256; ++i) {
    const auto [a0, a1] = random_pure();
    const auto [b0, b1] = random_pure();
    const double direct = std::norm(std::conj(a0) * b0 + std::conj(a1) * b1);
    const double closed = fidelity_mixed(DensityMatrix2::pure(a0, a1),
                                         DensityMatrix2::pure(b0, b1));
    worst.update(std::abs(direct - closed), 0.0, "sample " + std::to_string(i));
  }
  return worst.result("fidelity-pure-closed-form", 1e-12);
}

CheckResult check_partial_trace_validity() {
  Worst worst;
  std::mt19937 rng(20260811);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int i = 0; i < 256; ++i) {
    std::array<complexd, 4> raw;
    for (auto& a : raw) a = complexd(normal(rng), normal(rng));
    const JointPureState state = JointPureState::normalized(raw);
    for (Subsystem keep : {Subsystem::first, Subsystem::second}) {
      try {
        const DensityMatrix2 rho = partial_trace(state, keep);
        worst.update(std::abs(rho.trace() - 1.0), 0.0,
                     "trace, sample " + std::to_string(i));
        worst.update(std::max(0.0, -rho.det()), 0.0,
                     "det, sample " + std::to_string(i));
      } catch (const std::exception& e) {
        worst.update(1.0, 0.0, e.what());
      }
    }
  }
  return worst.result("partial-trace-validity", 1e-12);
}

CheckResult check_csv_roundtrip(int steps) {
  SweepConfig config;
  config.steps = steps;
  config.include_baselines = true;
  const std::vector<SweepRecord> records = run_sweep(config);
  const std::string csv = to_csv(records);
  CheckResult res;
  res.name = "csv-round-trip";
  try {
    const std::string again = to_csv(parse_csv(csv));
    res.passed = again == csv;
    res.detail = res.passed ? "byte-identical after re-parse"
                            : "re-serialized CSV differs";
  } catch (const std::exception& e) {
    res.passed = false;
    res.detail = e.what();
  }
  return res;
}

CheckResult check_sweep_record_bounds(const std::vector<GridPoint>& grid) {
  Worst worst;
  for (const GridPoint& gp : grid) {
    for (CopierFamily family : kAllCopiers) {
      const SweepRecord rec = eval_record(gp.f, family);
      for (double v : {rec.i1, rec.i1_ratio, rec.ih, rec.f_local, rec.q, rec.r,
                       rec.q_h}) {
        worst.update(std::isfinite(v) ? 0.0 : 1.0, gp.f,
                     to_string(family) + " non-finite");
      }
      worst.update(-rec.i1_ratio, gp.f, to_string(family) + " ratio < 0");
      worst.update(rec.i1_ratio - 1.0 - 1e-9, gp.f,
                   to_string(family) + " ratio > 1");
      if (gp.f == 0.0 && family != CopierFamily::uqcm) {
        worst.update(std::abs(rec.i1_ratio - 1.0), gp.f,
                     to_string(family) + " ratio at f=0");
      }
    }
  }
  return worst.result("sweep-record-bounds", 1e-9);
}

}  // namespace

std::vector<CheckResult> run_verify(int grid_steps) {
  if (grid_steps < 2) {
    throw std::domain_error("verify needs a grid of at least 2 steps");
  }
  const std::vector<GridPoint> grid = build_grid(grid_steps);
  std::vector<CheckResult> results;
  results.push_back(check_copier_bloch_consistency(grid));
  results.push_back(check_joint_unitarity(grid));
  results.push_back(check_partial_trace_symmetry(grid));
  results.push_back(check_unentangled_product(grid));
  results.push_back(check_local_fidelity(grid));
  results.push_back(check_uqcm_constant(grid));
  results.push_back(check_scan_matches_analytic(grid));
  results.push_back(check_holevo_dominates_scan(grid));
  results.push_back(check_wz_holevo_equality(grid));
  results.push_back(check_root_residuals(grid));
  results.push_back(check_wz_regime_root(grid));
  results.push_back(check_feasibility(grid));
  results.push_back(check_optimizer_dense_bound(grid));
  results.push_back(check_basis_orthogonality());
  results.push_back(check_ih_monotonicity());
  results.push_back(check_info_orderings(grid));
  results.push_back(check_wz_losslessness(grid));
  results.push_back(check_bloch_roundtrip());
  results.push_back(check_entropy_unitary_invariance());
  results.push_back(check_fidelity_pure_closed_form());
  results.push_back(check_partial_trace_validity());
  results.push_back(check_csv_roundtrip(grid_steps));
  results.push_back(check_sweep_record_bounds(grid));
  return results;
}

std::string format_report(const std::vector<CheckResult>& results) {
  std::string out;
  for (const CheckResult& res : results) {
    out += res.passed ? "PASS " : "FAIL ";
    out += res.name;
    out += "  ";
    out += res.detail;
    out += '\n';
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.passed; });
}

}  // namespace qcopy
