#include "qcopy/copiers.hpp"

#include <cmath>
#include <stdexcept>

#include "qcopy/optimizer.hpp"

namespace qcopy {

namespace {

double clamp01(double v) { return v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v); }

// sqrt with the -1e-12 clamping policy for closed-form radicands.
double safe_sqrt(double v) {
  if (v < 0.0) {
    if (v < -kClampTol) {
      throw std::invalid_argument("negative radicand beyond tolerance");
    }
    v = 0.0;
  }
  return std::sqrt(v);
}

// Copies in the common symmetric form: Bloch vectors (q_h, 0, +-q).
DensityMatrix2 copy_state(double q, double q_h, int sign) {
  return DensityMatrix2::from_entries(
      complexd(0.5 * (1.0 + sign * q), 0.0), complexd(0.5 * q_h, 0.0),
      complexd(0.5 * q_h, 0.0), complexd(0.5 * (1.0 - sign * q), 0.0));
}

// Local fidelity between input i and copy i for symmetric in-plane
// placements; equals fidelity_mixed(input, copy) for every family.
double symmetric_local_fidelity(double f, double q, double q_h) {
  return 0.5 * (1.0 + q * safe_sqrt(1.0 - f) + q_h * std::sqrt(f));
}

CopierOutput reduced_only_output(double f, double q, double r, double q_h,
                                 double local_fidelity) {
  CopierOutput out;
  out.copy1 = copy_state(q, q_h, +1);
  out.copy2 = copy_state(q, q_h, -1);
  out.q = q;
  out.r = r;
  out.q_h = q_h;
  out.local_fidelity = local_fidelity;
  return out;
}

}  // namespace

std::string to_string(CopierFamily family) {
  switch (family) {
    case CopierFamily::wz: return "wz";
    case CopierFamily::ultimate: return "ultimate";
    case CopierFamily::unentangled: return "unentangled";
    case CopierFamily::global_fid: return "global_fid";
    case CopierFamily::local_fid: return "local_fid";
    case CopierFamily::uqcm: return "uqcm";
  }
  throw std::domain_error("unknown copier family");
}

CopierFamily parse_copier(const std::string& tag) {
  for (CopierFamily family : kAllCopiers) {
    if (tag == to_string(family)) return family;
  }
  throw std::domain_error("unknown copier tag: " + tag);
}

DensityMatrix2 InputEnsemble::state1() const {
  return DensityMatrix2::pure(complexd(psi1[0], 0.0), complexd(psi1[1], 0.0));
}

DensityMatrix2 InputEnsemble::state2() const {
  return DensityMatrix2::pure(complexd(psi2[0], 0.0), complexd(psi2[1], 0.0));
}

BlochVector InputEnsemble::bloch1() const {
  return BlochVector{std::sqrt(f), 0.0, safe_sqrt(1.0 - f)};
}

BlochVector InputEnsemble::bloch2() const {
  return BlochVector{std::sqrt(f), 0.0, -safe_sqrt(1.0 - f)};
}

InputEnsemble make_ensemble(double f) {
  if (f < -kClampTol || f > 1.0 + kClampTol) {
    throw std::domain_error("overlap f must lie in [0, 1]");
  }
  f = clamp01(f);
  InputEnsemble ens;
  ens.f = f;
  ens.theta = 0.5 * std::asin(std::sqrt(f));
  const double c = std::cos(ens.theta);
  const double s = std::sin(ens.theta);
  ens.psi1 = {c, s};
  ens.psi2 = {s, c};
  return ens;
}

CopierOutput wz_copier(const InputEnsemble& ens) {
  const double c = ens.psi1[0];
  const double s = ens.psi1[1];
  const double q = safe_sqrt(1.0 - ens.f);
  CopierOutput out = reduced_only_output(ens.f, q, q, 0.0, 1.0 - ens.f / 2.0);
  out.joint1 = JointPureState({complexd(c, 0), 0.0, 0.0, complexd(s, 0)});
  out.joint2 = JointPureState({complexd(s, 0), 0.0, 0.0, complexd(c, 0)});
  return out;
}

CascadeCopies wz_cascade(const InputEnsemble& ens, int n_copies) {
  if (n_copies < 2) {
    throw std::domain_error("cascade needs at least two copies");
  }
  // Repeated basis copying turns a|+> + b|-> into a|+...+> + b|-...->,
  // so for n >= 2 the cross terms vanish in every single-copy marginal
  // and each copy is the diagonal mixture diag(|a|^2, |b|^2).
  const CopierOutput single = wz_copier(ens);
  CascadeCopies cascade;
  cascade.input1.assign(n_copies, single.copy1);
  cascade.input2.assign(n_copies, single.copy2);
  return cascade;
}

CopierOutput ultimate_copier(const InputEnsemble& ens,
                             const UltimateCopierSolution& sol) {
  // phi_m = pi is the below-threshold regime where this copier is the
  // WZ copier; the basis construction has a removable singularity
  // there, so emit the WZ transformation verbatim.
  if (std::cos(sol.phi_m) <= -1.0 + 1e-9) {
    return wz_copier(ens);
  }

  const double f = ens.f;
  const double r = sol.r_m;
  const double cphi = std::cos(sol.phi_m);
  const double q = r * std::sin(0.5 * sol.phi_m);
  const double q_h = r * std::cos(0.5 * sol.phi_m);

  const auto amp = [](double radicand) {
    if (radicand < -1e-10) {
      throw std::runtime_error(
          "ultimate copier amplitude radicand is negative: optimizer bug");
    }
    return std::sqrt(radicand < 0.0 ? 0.0 : radicand);
  };
  const double a1 = amp(0.5 * (1.0 + r));           // |b1> weight, input 1
  const double a2 = amp(0.5 * (1.0 - r));           // |b2> weight, input 1
  const double p1 = amp(0.5 * sol.x);               // |b1> weight, input 2
  const double p2 = amp(0.5 * sol.x - r * cphi);    // |b2> weight, input 2
  const double p34 = amp(0.5 * (1.0 - sol.x + r * cphi));

  const BasisMatrix basis = build_basis_matrix(sol.phi_m);
  std::array<complexd, 4> j1{}, j2{};
  for (int k = 0; k < 4; ++k) {
    j1[k] = a1 * basis[0][k] + a2 * basis[1][k];
    j2[k] = p1 * basis[0][k] + p2 * basis[1][k] +
            p34 * (basis[2][k] + basis[3][k]);
  }

  CopierOutput out =
      reduced_only_output(f, q, r, q_h, symmetric_local_fidelity(f, q, q_h));
  out.joint1 = JointPureState(j1);
  out.joint2 = JointPureState(j2);
  return out;
}

CopierOutput unentangled_copier(const InputEnsemble& ens) {
  const double f = ens.f;
  const double sf = std::sqrt(f);
  const double q = safe_sqrt(1.0 - sf);
  const double q_h = std::pow(f, 0.25);
  // Copy amplitudes: each joint output is the exact product copy x copy.
  const double a = safe_sqrt(0.5 * (1.0 + q));
  const double b = safe_sqrt(0.5 * (1.0 - q));

  CopierOutput out;
  out.copy1 = DensityMatrix2::pure(complexd(a, 0), complexd(b, 0));
  out.copy2 = DensityMatrix2::pure(complexd(b, 0), complexd(a, 0));
  out.joint1 = JointPureState(
      {complexd(a * a, 0), complexd(a * b, 0), complexd(a * b, 0),
       complexd(b * b, 0)});
  out.joint2 = JointPureState(
      {complexd(b * b, 0), complexd(a * b, 0), complexd(a * b, 0),
       complexd(a * a, 0)});
  out.q = q;
  out.r = 1.0;
  out.q_h = q_h;
  out.local_fidelity =
      0.5 * (std::pow(f, 0.75) + 1.0 + safe_sqrt((1.0 - f) * (1.0 - sf)));
  return out;
}

CopierOutput global_fid_copier(const InputEnsemble& ens) {
  const double f = ens.f;
  const double sf = std::sqrt(f);
  const double q = safe_sqrt((1.0 - f) / (1.0 + f));
  const double q_h = (f + sf) / (1.0 + f);
  const double r = std::sqrt(1.0 + f * (1.0 + 2.0 * sf)) / (1.0 + f);
  const double fid =
      0.5 * (1.0 + ((1.0 - f) * std::sqrt(1.0 + f) + f * (1.0 + sf)) / (1.0 + f));
  return reduced_only_output(f, q, r, q_h, fid);
}

CopierOutput local_fid_copier(const InputEnsemble& ens) {
  const double f = ens.f;
  const double sf = std::sqrt(f);
  // sin(2 phi) -> 0 as f -> 0 (perfect copying); the closed form is
  // 0/0 there, so take the limit analytically.
  const double s2p =
      f < 1e-12 ? 0.0
                : (sf - 1.0 + std::sqrt(1.0 - 2.0 * sf + 9.0 * f)) / (4.0 * sf);
  const double c2p = safe_sqrt(1.0 - s2p * s2p);
  const double q = safe_sqrt(1.0 - f) * c2p;
  const double q_h = s2p * c2p * (1.0 + sf);
  const double r =
      c2p * std::sqrt(1.0 - f + (1.0 + sf) * (1.0 + sf) * s2p * s2p);
  const double fid =
      0.5 * (1.0 + c2p * (1.0 - f + sf * (1.0 + sf) * s2p));
  return reduced_only_output(f, q, r, q_h, fid);
}

CopierOutput uqcm_copier(const InputEnsemble& ens) {
  const double f = ens.f;
  const double q = 2.0 / 3.0 * safe_sqrt(1.0 - f);
  const double q_h = 2.0 / 3.0 * std::sqrt(f);
  return reduced_only_output(f, q, 2.0 / 3.0, q_h, 5.0 / 6.0);
}

}  // namespace qcopy
