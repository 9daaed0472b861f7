#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qcopy/qstate.hpp"

// Six symmetric 1->2 qubit copier families acting on two equiprobable
// nonorthogonal signal states, parametrized by the squared overlap f.
// Each copier yields the two reduced copies together with the Bloch
// parameters (q, r, q_H) that feed the information and fidelity
// indicators:
//   q   = half the distance between the copies' Bloch vectors,
//   q_H = half the length of their sum,
//   r   = common Bloch length of the copies.

namespace qcopy {

enum class CopierFamily { wz, ultimate, unentangled, global_fid, local_fid, uqcm };

inline constexpr std::array<CopierFamily, 6> kAllCopiers = {
    CopierFamily::wz,         CopierFamily::ultimate,
    CopierFamily::unentangled, CopierFamily::global_fid,
    CopierFamily::local_fid,  CopierFamily::uqcm};

std::string to_string(CopierFamily family);
// Rejects unknown tags with std::domain_error.
CopierFamily parse_copier(const std::string& tag);

// The two equiprobable pure signal states
//   psi1 = cos(theta)|+> + sin(theta)|->,
//   psi2 = sin(theta)|+> + cos(theta)|->,
// with f = sin^2(2 theta) and priors fixed at (1/2, 1/2).
struct InputEnsemble {
  double f = 0.0;
  double theta = 0.0;
  std::array<double, 2> psi1{1.0, 0.0};
  std::array<double, 2> psi2{0.0, 1.0};

  DensityMatrix2 state1() const;
  DensityMatrix2 state2() const;
  BlochVector bloch1() const;  // (sqrt(f), 0,  sqrt(1-f))
  BlochVector bloch2() const;  // (sqrt(f), 0, -sqrt(1-f))
};

// f must lie in [0, 1].
InputEnsemble make_ensemble(double f);

struct CopierOutput {
  DensityMatrix2 copy1;
  DensityMatrix2 copy2;
  // Joint two-copy states, present for the three unitary constructions
  // (wz, ultimate, unentangled); the other families are specified by
  // their reduced copies only.
  std::optional<JointPureState> joint1;
  std::optional<JointPureState> joint2;
  double q = 0.0;
  double r = 0.0;
  double q_h = 0.0;
  double local_fidelity = 0.0;
};

// Solution of the ultimate-information copier design problem at one f,
// produced by maximize_ih() in optimizer.hpp.
struct UltimateCopierSolution {
  double r_m = 0.0;    // copy Bloch length, in [sqrt(1-f), 1]
  double phi_m = 0.0;  // angle between the copies' Bloch vectors, (0, pi]
  double x = 0.0;      // squared |b1> amplitude of the second output
  double iH = 0.0;     // ultimate copied information, bits
};

// Basis-copying transformation |+-> -> |+-,+->; copies as much one-state
// information as the originals carry.
CopierOutput wz_copier(const InputEnsemble& ens);

// Repeated basis copying: n_copies >= 2 classical duplicates per input.
// Every copy individually equals the single-pass reduced copy.
struct CascadeCopies {
  std::vector<DensityMatrix2> input1;
  std::vector<DensityMatrix2> input2;
};
CascadeCopies wz_cascade(const InputEnsemble& ens, int n_copies);

// Ancillaless copier maximizing the Holevo-bound information; sol must
// come from maximize_ih for the same f. Below the regime threshold
// (phi_m = pi) this is exactly the WZ copier.
CopierOutput ultimate_copier(const InputEnsemble& ens,
                             const UltimateCopierSolution& sol);

// Optimal copier with exactly unentangled (product-state) copies.
CopierOutput unentangled_copier(const InputEnsemble& ens);

// Global-fidelity-optimal copier (reduced copies only).
CopierOutput global_fid_copier(const InputEnsemble& ens);

// Local-fidelity-optimal copier (reduced copies only).
CopierOutput local_fid_copier(const InputEnsemble& ens);

// Universal copying machine: state-independent local fidelity 5/6.
CopierOutput uqcm_copier(const InputEnsemble& ens);

}  // namespace qcopy
