#pragma once

#include <array>
#include <stdexcept>

#include "qcopy/copiers.hpp"

// Design machinery for the ultimate-information copier: the quartic
// fixing cos(phi) as a function of the copy Bloch length r, the 1-D
// maximization of the Holevo information over r, the consistency check
// against the two coupled constraint equations, and the orthogonal
// basis that realizes the optimum with the best local fidelity.

namespace qcopy {

// Thrown by cos_phi_of_r when no admissible root exists at the given r;
// maximize_ih treats such points as objective value -infinity.
class InfeasibleRootError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Coefficients of the quartic in y = cos(phi_m), highest degree first:
//   c4 y^4 + c3 y^3 + c2 y^2 + c1 y + c0 = 0.
struct QuarticCoefficients {
  double c4 = 0.0, c3 = 0.0, c2 = 0.0, c1 = 0.0, c0 = 0.0;
};

// Requires f in [0, 1] and r in [sqrt(1-f), 1].
QuarticCoefficients quartic_coeffs(double f, double r);

// |polynomial(y)| by Horner evaluation; used to validate returned roots.
double quartic_residual(const QuarticCoefficients& c, double y);

// Second-largest real root of the quartic within [-1, 1]. Roots come
// from companion-matrix eigenvalues, are Newton-polished on the real
// polynomial, deduplicated to 1e-10, sorted descending, then index 1
// is taken (index 0 when a full degeneracy leaves a single value).
// Throws InfeasibleRootError when no admissible root exists.
double cos_phi_of_r(double f, double r);

// Witness that the solution satisfies both constraint equations with
// the phase parameters K = C = 1.
struct FeasibilityWitness {
  double x = 0.0;
  double K = 1.0;
  double C = 1.0;
  double residual_f = 0.0;  // overlap-preservation equation
  double residual_n = 0.0;  // reduced-state consistency equation
};

// Maximizes the ultimate copied information over r in [sqrt(1-f), 1]:
// 513-point coarse grid, then golden-section refinement to |dr| < 1e-10.
// Endpoints are analytic: f = 0 is the exact cloner, f = 1 carries no
// information. Below the regime threshold the result is the WZ copier
// (r_m = sqrt(1-f), phi_m = pi) exactly.
UltimateCopierSolution maximize_ih(double f);

// Verifies sol against both constraint equations (residuals < 1e-8 with
// K = C = 1) and cross-solves the overlap equation for x by bisection.
// Throws std::runtime_error on inconsistency (a root-selection bug).
FeasibilityWitness feasibility_check(double f,
                                     const UltimateCopierSolution& sol);

// Row j holds the expansion of transformation basis state |b_j> over the
// canonical product basis (|++>, |+->, |-+>, |-->). Orthogonal for any
// phi_m; at phi_m = pi it reduces to a permutation matrix.
using BasisMatrix = std::array<std::array<double, 4>, 4>;
BasisMatrix build_basis_matrix(double phi_m);

}  // namespace qcopy
