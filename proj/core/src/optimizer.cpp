#include "qcopy/optimizer.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "qcopy/infomeasures.hpp"

namespace qcopy {

namespace {

constexpr double kPi = std::numbers::pi;

double horner(const double* c, int n, double x) {
  double v = 0.0;
  for (int i = 0; i <= n; ++i) v = v * x + c[i];
  return v;
}

struct PolishResult {
  double x = 0.0;
  double residual = 0.0;
  double last_step = std::numeric_limits<double>::infinity();
};

// Newton iteration on the real polynomial; rescues eigenvalues that
// picked up a small spurious imaginary part (double roots split into
// conjugate pairs by rounding) and sharpens simple roots to machine
// precision. Steps are only taken while they reduce |P|: at a double
// root both P and P' sit at the noise floor and a raw step would jump
// away from an already converged point.
PolishResult newton_polish(const double* c, int n, double x0) {
  double d[5];
  for (int i = 0; i < n; ++i) d[i] = c[i] * (n - i);
  PolishResult res;
  res.x = x0;
  double fx = horner(c, n, x0);
  for (int it = 0; it < 24; ++it) {
    const double dfx = horner(d, n - 1, res.x);
    if (dfx == 0.0) break;
    const double x_next = res.x - fx / dfx;
    const double f_next = horner(c, n, x_next);
    if (!(std::abs(f_next) < std::abs(fx))) break;
    res.last_step = std::abs(x_next - res.x);
    res.x = x_next;
    fx = f_next;
    if (res.last_step < 1e-15) break;
  }
  res.residual = std::abs(fx);
  return res;
}

// Root candidates of c[0] x^n + ... + c[n]: companion-matrix
// eigenvalues, recursively augmented with the derivative's candidates.
// A multiple root of the polynomial is a simple root of its derivative,
// so the chain still reaches it when the Schur iteration stalls on the
// defective companion matrix (which happens: the quartic is a perfect
// square at r = 1).
void gather_candidates(const double* coeffs, int degree,
                       std::vector<double>& out) {
  double scale = 0.0;
  for (int i = 0; i <= degree; ++i) scale = std::max(scale, std::abs(coeffs[i]));
  if (scale == 0.0) return;

  int lead = 0;
  while (lead < degree && std::abs(coeffs[lead]) < 1e-14 * scale) ++lead;
  const int n = degree - lead;
  const double* c = coeffs + lead;

  if (n == 0) return;
  if (n == 1) {
    out.push_back(-c[1] / c[0]);
    return;
  }
  if (n == 2) {
    const double disc = c[1] * c[1] - 4.0 * c[0] * c[2];
    const double vertex = -0.5 * c[1] / c[0];
    if (disc >= 0.0) {
      const double sq = std::sqrt(disc) * 0.5 / std::abs(c[0]);
      out.push_back(vertex - sq);
      out.push_back(vertex + sq);
    } else {
      out.push_back(vertex);  // near-double root candidate
    }
    return;
  }

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(n, n);
  for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) companion(i, n - 1) = -c[n - i] / c[0];
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  if (solver.info() == Eigen::Success) {
    for (int i = 0; i < n; ++i) {
      const auto z = solver.eigenvalues()(i);
      if (std::abs(z.imag()) <= 1e-6) out.push_back(z.real());
    }
  }
  double deriv[4];
  for (int i = 0; i < n; ++i) deriv[i] = c[i] * (n - i);
  gather_candidates(deriv, n - 1, out);
}

// Real roots inside [lo, hi]: Newton-polished candidates that actually
// satisfy the polynomial to within the residual tolerance.
std::vector<double> real_roots_in(const double* coeffs, int degree, double lo,
                                  double hi) {
  double scale = 0.0;
  for (int i = 0; i <= degree; ++i) scale = std::max(scale, std::abs(coeffs[i]));
  std::vector<double> out;
  if (scale == 0.0) return out;

  std::vector<double> candidates;
  candidates.reserve(10);
  gather_candidates(coeffs, degree, candidates);

  // A candidate counts as a root when Newton drove it all the way in, or
  // when the polynomial already sits at the rounding floor (a double
  // root). Derivative candidates that merely found a shallow dip between
  // two nearby roots fail both conditions and are discarded.
  const double residual_tol = 1e-8 * std::max(1.0, scale);
  const double floor_tol = 1e-14 * std::max(1.0, scale);
  for (double candidate : candidates) {
    const PolishResult polished = newton_polish(coeffs, degree, candidate);
    if (polished.residual > residual_tol) continue;
    if (polished.last_step > 1e-9 && polished.residual > floor_tol) continue;
    if (polished.x < lo - 1e-9 || polished.x > hi + 1e-9) continue;
    out.push_back(std::clamp(polished.x, lo, hi));
  }
  return out;
}

// Overlap-preservation constraint evaluated with C = 1; zero at a
// consistent (f, r, cos phi, x).
double overlap_equation(double f, double r, double u, double x) {
  const double w = std::sqrt(std::max(0.0, 1.0 - r * r));
  double rad = x * (x - 2.0 * r * u);
  if (rad < 0.0) rad = 0.0;
  return x + r * (r - 1.0) * u + w * std::sqrt(rad) - 2.0 * f;
}

// Reduced-state consistency constraint evaluated with K = 1.
double reduction_equation(double r, double u, double x) {
  double rad = x * (x - 2.0 * r * u);
  if (rad < 0.0) rad = 0.0;
  return r * r * (1.0 - u * u) -
         2.0 * (1.0 + r * u - x) * (x - r * u + std::sqrt(rad));
}

double x_from_display(double r, double u) {
  const double w = std::sqrt(std::max(0.0, 1.0 - r * r));
  return 0.5 * (1.0 + u * u + 2.0 * r * u + w * (1.0 - u * u));
}

struct Objective {
  double value = -std::numeric_limits<double>::infinity();
  double cos_phi = -1.0;
};

Objective evaluate_ih(double f, double r) {
  Objective obj;
  try {
    obj.cos_phi = cos_phi_of_r(f, r);
  } catch (const InfeasibleRootError&) {
    return obj;
  }
  const double q_h = r * std::sqrt(std::max(0.0, 0.5 * (1.0 + obj.cos_phi)));
  obj.value = ultimate_info_from_bloch(r, std::min(q_h, r));
  return obj;
}

}  // namespace

QuarticCoefficients quartic_coeffs(double f, double r) {
  if (f < -kClampTol || f > 1.0 + kClampTol) {
    throw std::domain_error("overlap f must lie in [0, 1]");
  }
  f = std::clamp(f, 0.0, 1.0);
  const double lo = std::sqrt(1.0 - f);
  if (r < lo - 1e-12 || r > 1.0 + 1e-12) {
    throw std::domain_error("r must lie in [sqrt(1-f), 1]");
  }
  r = std::clamp(r, 0.0, 1.0);
  const double r2 = r * r;
  const double w = std::sqrt(std::max(0.0, 1.0 - r2));
  QuarticCoefficients c;
  c.c4 = r2 * (2.0 - r2 - 2.0 * w);
  c.c3 = 4.0 * r2 * (1.0 - w);
  c.c2 = 2.0 * (r2 * r2 + 2.0 * r2 + 4.0 * f * (w - 1.0));
  c.c1 = 4.0 * r2 * (1.0 + w - 4.0 * f);
  c.c0 = (4.0 * f - 1.0) * (4.0 * f - 1.0) - (1.0 - r2) * (1.0 - r2) +
         2.0 * (r2 - 4.0 * f) * w;
  return c;
}

double quartic_residual(const QuarticCoefficients& c, double y) {
  const double coeffs[5] = {c.c4, c.c3, c.c2, c.c1, c.c0};
  return std::abs(horner(coeffs, 4, y));
}

double cos_phi_of_r(double f, double r) {
  const QuarticCoefficients qc = quartic_coeffs(f, r);
  const double coeffs[5] = {qc.c4, qc.c3, qc.c2, qc.c1, qc.c0};
  std::vector<double> roots = real_roots_in(coeffs, 4, -1.0, 1.0);
  if (roots.empty()) {
    throw InfeasibleRootError("no admissible cos(phi) root at this r");
  }
  std::sort(roots.begin(), roots.end(), std::greater<>());
  std::vector<double> distinct;
  for (double x : roots) {
    if (distinct.empty() || distinct.back() - x > 1e-10) distinct.push_back(x);
  }
  // Second-largest distinct real root; a fully degenerate polynomial
  // leaves a single value that is simultaneously largest and second
  // largest.
  return distinct.size() >= 2 ? distinct[1] : distinct[0];
}

UltimateCopierSolution maximize_ih(double f) {
  if (f < -kClampTol || f > 1.0 + kClampTol) {
    throw std::domain_error("overlap f must lie in [0, 1]");
  }
  f = std::clamp(f, 0.0, 1.0);
  if (f < 1e-15) {
    return {1.0, kPi, 0.0, 1.0};  // orthogonal inputs: exact cloner
  }
  if (f > 1.0 - 1e-15) {
    return {0.0, kPi, 1.0, 0.0};  // identical inputs: nothing to learn
  }

  const double lo = std::sqrt(1.0 - f);
  const double hi = 1.0;
  constexpr int kCoarsePoints = 513;
  int best_idx = 0;
  double best_val = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kCoarsePoints; ++i) {
    const double r = lo + (i * (hi - lo)) / (kCoarsePoints - 1);
    const Objective obj = evaluate_ih(f, r);
    if (obj.value > best_val) {
      best_val = obj.value;
      best_idx = i;
    }
  }

  double a = lo + (std::max(0, best_idx - 1) * (hi - lo)) / (kCoarsePoints - 1);
  double b = lo + (std::min(kCoarsePoints - 1, best_idx + 1) * (hi - lo)) /
                      (kCoarsePoints - 1);
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = evaluate_ih(f, x1).value;
  double f2 = evaluate_ih(f, x2).value;
  while (b - a > 1e-10) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = evaluate_ih(f, x2).value;
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = evaluate_ih(f, x1).value;
    }
  }

  double r_m = 0.5 * (a + b);
  Objective best = evaluate_ih(f, r_m);
  // The left endpoint is the WZ copier; prefer it exactly whenever it
  // is not beaten, which also pins cos(phi_m) = -1 below the regime
  // threshold instead of a refinement artifact next to it.
  const Objective at_lo = evaluate_ih(f, lo);
  if (at_lo.value >= best.value - 1e-12) {
    r_m = lo;
    best = at_lo;
  }

  UltimateCopierSolution sol;
  sol.r_m = r_m;
  sol.phi_m = std::acos(std::clamp(best.cos_phi, -1.0, 1.0));
  sol.x = x_from_display(r_m, best.cos_phi);
  const double q_h = r_m * std::cos(0.5 * sol.phi_m);
  sol.iH = ultimate_info_from_bloch(r_m, std::min(q_h, r_m));
  return sol;
}

FeasibilityWitness feasibility_check(double f,
                                     const UltimateCopierSolution& sol) {
  const double r = sol.r_m;
  const double u = std::cos(sol.phi_m);
  FeasibilityWitness witness;
  witness.x = sol.x;
  witness.residual_f = std::abs(overlap_equation(f, r, u, sol.x));
  witness.residual_n = std::abs(reduction_equation(r, u, sol.x));

  // Independent route to x: the overlap equation is increasing in x on
  // the admissible interval, so bisect it and require agreement.
  double xa = std::max(0.0, 2.0 * r * u);
  double xb = 2.0;
  double ga = overlap_equation(f, r, u, xa);
  double gb = overlap_equation(f, r, u, xb);
  if (ga > 1e-8 || gb < -1e-8) {
    throw std::runtime_error("feasibility check: overlap equation has no root");
  }
  for (int it = 0; it < 200 && xb - xa > 1e-15; ++it) {
    const double xm = 0.5 * (xa + xb);
    if (overlap_equation(f, r, u, xm) <= 0.0) {
      xa = xm;
    } else {
      xb = xm;
    }
  }
  const double x_solved = 0.5 * (xa + xb);

  if (witness.residual_f > 1e-8 || witness.residual_n > 1e-8 ||
      std::abs(x_solved - sol.x) > 1e-8) {
    throw std::runtime_error("feasibility check failed: no common x satisfies "
                             "both constraint equations");
  }
  return witness;
}

BasisMatrix build_basis_matrix(double phi_m) {
  if (!(phi_m > 0.0) || phi_m > kPi + 1e-12) {
    throw std::domain_error("phi_m must lie in (0, pi]");
  }
  const double s = std::sin(0.5 * phi_m);
  const double c = std::cos(0.5 * phi_m);
  // Rows over the ordering (|++>, |-->, |+->, |-+>): the first two basis
  // states mix the swap-invariant product states, the last two carry
  // equal |+-> / |-+> weight so every output stays symmetric under copy
  // exchange.
  const double u[4][4] = {
      {0.5 * (1 + s), 0.5 * (1 - s), 0.5 * c, 0.5 * c},
      {0.5 * (1 - s), 0.5 * (1 + s), -0.5 * c, -0.5 * c},
      {-0.5 * c, 0.5 * c, 0.5 * (1 + s), 0.5 * (s - 1)},
      {-0.5 * c, 0.5 * c, 0.5 * (s - 1), 0.5 * (1 + s)}};
  // Reorder columns to the canonical basis (|++>, |+->, |-+>, |-->).
  BasisMatrix basis{};
  for (int j = 0; j < 4; ++j) {
    basis[j][0] = u[j][0];
    basis[j][1] = u[j][2];
    basis[j][2] = u[j][3];
    basis[j][3] = u[j][1];
  }
  return basis;
}

}  // namespace qcopy
