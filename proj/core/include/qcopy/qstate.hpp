#pragma once

#include <array>
#include <complex>

// Exact linear algebra for 2- and 4-dimensional complex state spaces:
// density matrices, Bloch conversion, partial traces, entropy, fidelity.
// Everything here is a pure value type; nothing holds global state.

namespace qcopy {

using complexd = std::complex<double>;

// Tolerances used when validating state invariants.
inline constexpr double kHermTol = 1e-12;
inline constexpr double kNormTol = 1e-12;
inline constexpr double kPsdTol = 1e-12;
// Arguments of sqrt/log are clamped to 0 when within this of zero from
// below; anything more negative is a hard error.
inline constexpr double kClampTol = 1e-12;

struct BlochVector {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  double norm() const;
};

// 2x2 complex Hermitian unit-trace positive-semidefinite matrix.
// Hermiticity is exact by construction: only the two real diagonal
// entries and the upper off-diagonal entry are stored.
class DensityMatrix2 {
 public:
  // Maximally mixed state.
  DensityMatrix2() : d00_(0.5), d11_(0.5), off_(0.0, 0.0) {}

  // Validates Hermiticity, unit trace and positivity; throws
  // std::invalid_argument on violation.
  static DensityMatrix2 from_entries(complexd a00, complexd a01, complexd a10,
                                     complexd a11);

  // |psi><psi| for a normalized amplitude pair (up, down).
  static DensityMatrix2 pure(complexd up, complexd down);

  complexd entry(int i, int j) const;
  double diag(int i) const { return i == 0 ? d00_ : d11_; }
  complexd off() const { return off_; }

  double trace() const { return d00_ + d11_; }
  double det() const;
  double purity() const;  // Tr(rho^2)

 private:
  DensityMatrix2(double d00, double d11, complexd off)
      : d00_(d00), d11_(d11), off_(off) {}

  double d00_, d11_;
  complexd off_;  // entry (0,1); entry (1,0) is its conjugate
};

// 4-component complex unit vector over the two-copy space, ordered
// (|++>, |+->, |-+>, |-->).
class JointPureState {
 public:
  // Validates unit norm to kNormTol; throws std::invalid_argument.
  explicit JointPureState(std::array<complexd, 4> amplitudes);

  // Scales an arbitrary nonzero vector to unit norm first.
  static JointPureState normalized(std::array<complexd, 4> raw);

  const std::array<complexd, 4>& amplitudes() const { return amp_; }
  complexd amp(int k) const { return amp_[k]; }

 private:
  std::array<complexd, 4> amp_;
};

enum class Subsystem { first, second };

// Reduced state of one copy; total on valid inputs.
DensityMatrix2 partial_trace(const JointPureState& state, Subsystem keep);

BlochVector bloch_from_state(const DensityMatrix2& rho);

// Inverse of bloch_from_state; rejects |v| > 1 + 1e-9.
DensityMatrix2 state_from_bloch(const BlochVector& v);

// Von Neumann entropy in bits; eigenvalues from trace/determinant.
double von_neumann_entropy(const DensityMatrix2& rho);

// Mixed-state fidelity via the two-level closed form
// F = Tr(rho1 rho2) + 2 sqrt(det rho1 * det rho2).
double fidelity_mixed(const DensityMatrix2& rho1, const DensityMatrix2& rho2);

// |<a|b>|^2 for normalized joint states.
double overlap_sq(const JointPureState& a, const JointPureState& b);

}  // namespace qcopy
