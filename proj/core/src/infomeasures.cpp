#include "qcopy/infomeasures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qcopy {

namespace {

double xlog2(double p) { return p <= 0.0 ? 0.0 : p * std::log2(p); }

// Binary entropy in bits.
double h2(double p) { return -xlog2(p) - xlog2(1.0 - p); }

struct Vec3 {
  double x, y, z;
};

Vec3 to_vec(const BlochVector& b) { return {b.x, b.y, b.z}; }
double dot(const Vec3& a, const Vec3& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

// Mutual information of the two-outcome projective measurement along
// unit direction n, for equiprobable states with Bloch vectors v1, v2.
double plane_mi(const Vec3& v1, const Vec3& v2, const Vec3& n) {
  const double p1 = std::clamp(0.5 * (1.0 + dot(n, v1)), 0.0, 1.0);
  const double p2 = std::clamp(0.5 * (1.0 + dot(n, v2)), 0.0, 1.0);
  return h2(0.5 * (p1 + p2)) - 0.5 * h2(p1) - 0.5 * h2(p2);
}

}  // namespace

MeasurementStatistics MeasurementStatistics::make(std::vector<double> row1,
                                                  std::vector<double> row2) {
  if (row1.size() != row2.size() || row1.empty()) {
    throw std::invalid_argument("conditional rows must match and be nonempty");
  }
  for (const auto* row : {&row1, &row2}) {
    double sum = 0.0;
    for (double p : *row) {
      if (p < -kClampTol || p > 1.0 + kClampTol) {
        throw std::invalid_argument("conditional probability outside [0, 1]");
      }
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-12) {
      throw std::invalid_argument("conditional row does not sum to 1");
    }
  }
  MeasurementStatistics stats;
  stats.marginals.resize(row1.size());
  for (std::size_t j = 0; j < row1.size(); ++j) {
    stats.marginals[j] = 0.5 * (row1[j] + row2[j]);
  }
  stats.cond_probs = {std::move(row1), std::move(row2)};
  return stats;
}

double mutual_information(const MeasurementStatistics& stats) {
  double info = 0.0;
  for (const auto& row : stats.cond_probs) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] > 0.0 && stats.marginals[j] > 0.0) {
        info += 0.5 * row[j] * std::log2(row[j] / stats.marginals[j]);
      }
    }
  }
  return info < 0.0 ? 0.0 : info;
}

double binary_info_from_q(double q) {
  if (q < -kClampTol || q > 1.0 + kClampTol) {
    throw std::domain_error("distinguishability q must lie in [0, 1]");
  }
  q = std::clamp(q, 0.0, 1.0);
  return 0.5 * (xlog2(1.0 + q) + xlog2(1.0 - q));
}

double one_state_info(const CopierOutput& out) {
  return binary_info_from_q(out.q);
}

double holevo_two_state(const DensityMatrix2& rho1, const DensityMatrix2& rho2,
                        double p1) {
  if (p1 < 0.0 || p1 > 1.0) {
    throw std::domain_error("prior p1 must lie in [0, 1]");
  }
  const double p2 = 1.0 - p1;
  const DensityMatrix2 avg = DensityMatrix2::from_entries(
      p1 * rho1.entry(0, 0) + p2 * rho2.entry(0, 0),
      p1 * rho1.entry(0, 1) + p2 * rho2.entry(0, 1),
      p1 * rho1.entry(1, 0) + p2 * rho2.entry(1, 0),
      p1 * rho1.entry(1, 1) + p2 * rho2.entry(1, 1));
  const double chi = von_neumann_entropy(avg) -
                     p1 * von_neumann_entropy(rho1) -
                     p2 * von_neumann_entropy(rho2);
  return chi < 0.0 ? 0.0 : chi;
}

double ultimate_info_from_bloch(double r, double q_H) {
  if (q_H > r + 1e-12) {
    throw std::domain_error("q_H must not exceed the Bloch length r");
  }
  return binary_info_from_q(r) - binary_info_from_q(std::min(q_H, r));
}

double i1_baseline(double f) {
  if (f < -kClampTol || f > 1.0 + kClampTol) {
    throw std::domain_error("overlap f must lie in [0, 1]");
  }
  f = std::clamp(f, 0.0, 1.0);
  return binary_info_from_q(std::sqrt(1.0 - f));
}

double ih_baseline(double f) {
  if (f < -kClampTol || f > 1.0 + kClampTol) {
    throw std::domain_error("overlap f must lie in [0, 1]");
  }
  f = std::clamp(f, 0.0, 1.0);
  return 1.0 - binary_info_from_q(std::sqrt(f));
}

double accessible_info_scan(const DensityMatrix2& rho1,
                            const DensityMatrix2& rho2) {
  const Vec3 v1 = to_vec(bloch_from_state(rho1));
  const Vec3 v2 = to_vec(bloch_from_state(rho2));

  // Orthonormal basis of the plane spanned by the two Bloch vectors;
  // degenerate cases fall back to a fixed axis so the scan stays total.
  Vec3 u1 = norm(v1) > 1e-14 ? v1 : (norm(v2) > 1e-14 ? v2 : Vec3{0, 0, 1});
  const double n1 = norm(u1);
  u1 = {u1.x / n1, u1.y / n1, u1.z / n1};
  const double proj = dot(v2, u1);
  Vec3 u2 = {v2.x - proj * u1.x, v2.y - proj * u1.y, v2.z - proj * u1.z};
  if (norm(u2) < 1e-12) {
    // Collinear vectors: any direction orthogonal to u1 completes the
    // plane. Cross u1 with the axis it is least aligned with.
    const Vec3 axis = std::abs(u1.x) <= std::abs(u1.z) ? Vec3{1, 0, 0}
                                                       : Vec3{0, 0, 1};
    u2 = {u1.y * axis.z - u1.z * axis.y, u1.z * axis.x - u1.x * axis.z,
          u1.x * axis.y - u1.y * axis.x};
  }
  const double n2 = norm(u2);
  u2 = {u2.x / n2, u2.y / n2, u2.z / n2};

  const auto mi_at = [&](double chi) {
    const double c = std::cos(chi);
    const double s = std::sin(chi);
    return plane_mi(v1, v2,
                    {c * u1.x + s * u2.x, c * u1.y + s * u2.y,
                     c * u1.z + s * u2.z});
  };

  constexpr int kScanPoints = 2048;
  const double step = std::numbers::pi / kScanPoints;
  double best_chi = 0.0;
  double best = mi_at(0.0);
  for (int k = 1; k < kScanPoints; ++k) {
    const double chi = k * step;
    const double v = mi_at(chi);
    if (v > best) {
      best = v;
      best_chi = chi;
    }
  }

  // Golden-section refinement around the best scan angle.
  double a = best_chi - step;
  double b = best_chi + step;
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = mi_at(x1);
  double f2 = mi_at(x2);
  while (b - a > 1e-10) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = mi_at(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = mi_at(x1);
    }
  }
  return std::max(best, mi_at(0.5 * (a + b)));
}

}  // namespace qcopy
