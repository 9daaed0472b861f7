#include "qcopy/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcopy {

namespace {

// Clamp tiny negative round-off to zero; reject genuinely negative input.
double clamp_nonneg(double v, const char* what) {
  if (v >= 0.0) return v;
  if (v >= -kClampTol) return 0.0;
  throw std::invalid_argument(std::string(what) +
                              " is negative beyond tolerance");
}

double xlog2(double p) { return p <= 0.0 ? 0.0 : p * std::log2(p); }

}  // namespace

double BlochVector::norm() const { return std::sqrt(x * x + y * y + z * z); }

DensityMatrix2 DensityMatrix2::from_entries(complexd a00, complexd a01,
                                            complexd a10, complexd a11) {
  if (std::abs(a01 - std::conj(a10)) > kHermTol ||
      std::abs(a00.imag()) > kHermTol || std::abs(a11.imag()) > kHermTol) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  const double d00 = a00.real();
  const double d11 = a11.real();
  if (std::abs(d00 + d11 - 1.0) > kNormTol) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
  const complexd off = 0.5 * (a01 + std::conj(a10));
  const double det = d00 * d11 - std::norm(off);
  if (det < -kPsdTol || d00 < -kPsdTol || d11 < -kPsdTol) {
    throw std::invalid_argument("density matrix is not positive semidefinite");
  }
  return DensityMatrix2(d00, d11, off);
}

DensityMatrix2 DensityMatrix2::pure(complexd up, complexd down) {
  const double n = std::norm(up) + std::norm(down);
  if (std::abs(n - 1.0) > kNormTol) {
    throw std::invalid_argument("pure-state amplitudes are not normalized");
  }
  return DensityMatrix2(std::norm(up), std::norm(down), up * std::conj(down));
}

complexd DensityMatrix2::entry(int i, int j) const {
  if (i == 0 && j == 0) return complexd(d00_, 0.0);
  if (i == 1 && j == 1) return complexd(d11_, 0.0);
  if (i == 0 && j == 1) return off_;
  return std::conj(off_);
}

double DensityMatrix2::det() const { return d00_ * d11_ - std::norm(off_); }

double DensityMatrix2::purity() const {
  return d00_ * d00_ + d11_ * d11_ + 2.0 * std::norm(off_);
}

JointPureState::JointPureState(std::array<complexd, 4> amplitudes)
    : amp_(amplitudes) {
  double n = 0.0;
  for (const auto& a : amp_) n += std::norm(a);
  if (std::abs(n - 1.0) > kNormTol) {
    throw std::invalid_argument("joint state is not normalized");
  }
}

JointPureState JointPureState::normalized(std::array<complexd, 4> raw) {
  double n = 0.0;
  for (const auto& a : raw) n += std::norm(a);
  if (n <= 0.0) throw std::invalid_argument("cannot normalize a zero vector");
  const double s = 1.0 / std::sqrt(n);
  for (auto& a : raw) a *= s;
  return JointPureState(raw);
}

DensityMatrix2 partial_trace(const JointPureState& state, Subsystem keep) {
  // Amplitudes as a 2x2 matrix M[o][c] over (first, second) subsystem
  // indices; ordering (|++>, |+->, |-+>, |-->) is row-major.
  const auto& a = state.amplitudes();
  const complexd m[2][2] = {{a[0], a[1]}, {a[2], a[3]}};
  complexd r00(0), r01(0), r11(0);
  if (keep == Subsystem::first) {
    for (int c = 0; c < 2; ++c) {
      r00 += m[0][c] * std::conj(m[0][c]);
      r01 += m[0][c] * std::conj(m[1][c]);
      r11 += m[1][c] * std::conj(m[1][c]);
    }
  } else {
    for (int o = 0; o < 2; ++o) {
      r00 += m[o][0] * std::conj(m[o][0]);
      r01 += m[o][0] * std::conj(m[o][1]);
      r11 += m[o][1] * std::conj(m[o][1]);
    }
  }
  return DensityMatrix2::from_entries(r00, r01, std::conj(r01), r11);
}

BlochVector bloch_from_state(const DensityMatrix2& rho) {
  return BlochVector{2.0 * rho.off().real(), -2.0 * rho.off().imag(),
                     rho.diag(0) - rho.diag(1)};
}

DensityMatrix2 state_from_bloch(const BlochVector& v) {
  const double n = v.norm();
  if (n > 1.0 + 1e-9) {
    throw std::domain_error("Bloch vector lies outside the unit ball");
  }
  // Norms inside the 1e-9 band are rounding; rescale onto the sphere so
  // the entries satisfy positivity exactly.
  const double s = n > 1.0 ? 1.0 / n : 1.0;
  return DensityMatrix2::from_entries(
      complexd(0.5 * (1.0 + s * v.z), 0.0), 0.5 * complexd(s * v.x, -s * v.y),
      0.5 * complexd(s * v.x, s * v.y), complexd(0.5 * (1.0 - s * v.z), 0.0));
}

double von_neumann_entropy(const DensityMatrix2& rho) {
  // Eigenvalues of a Hermitian trace-1 matrix: (1 +- sqrt(1 - 4 det)) / 2.
  const double disc =
      std::sqrt(clamp_nonneg(1.0 - 4.0 * rho.det(), "entropy discriminant"));
  const double lp = 0.5 * (1.0 + disc);
  const double lm = clamp_nonneg(0.5 * (1.0 - disc), "eigenvalue");
  return -xlog2(lp) - xlog2(lm);
}

double fidelity_mixed(const DensityMatrix2& rho1, const DensityMatrix2& rho2) {
  // Determinants this small are purity lost to entry rounding; flushing
  // them keeps pure states exactly pure under the square root, whose
  // slope is unbounded at zero.
  constexpr double kPurityFloor = 1e-15;
  const auto det_of = [](const DensityMatrix2& rho) {
    const double d = clamp_nonneg(rho.det(), "determinant");
    return d < kPurityFloor ? 0.0 : d;
  };
  const double tr12 = rho1.diag(0) * rho2.diag(0) + rho1.diag(1) * rho2.diag(1) +
                      2.0 * (rho1.off() * std::conj(rho2.off())).real();
  const double f = tr12 + 2.0 * std::sqrt(det_of(rho1) * det_of(rho2));
  return std::clamp(f, 0.0, 1.0);
}

double overlap_sq(const JointPureState& a, const JointPureState& b) {
  complexd ip(0);
  for (int k = 0; k < 4; ++k) ip += std::conj(a.amp(k)) * b.amp(k);
  return std::min(std::norm(ip), 1.0);
}

}  // namespace qcopy
