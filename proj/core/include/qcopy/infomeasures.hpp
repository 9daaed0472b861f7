#pragma once

#include <vector>

#include "qcopy/copiers.hpp"
#include "qcopy/qstate.hpp"

// Information quantities for the two-state equiprobable ensemble, all in
// bits with base-2 logarithms: one-state (measure-one-at-a-time)
// information, the Holevo bound, baselines for the uncopied signal, and
// a measurement-scan estimate of the accessible information that serves
// as an independent cross-check on the closed forms.

namespace qcopy {

// Conditional outcome probabilities P(j|i) for a binary equiprobable
// source; marginals are the prior-weighted column averages.
struct MeasurementStatistics {
  std::array<std::vector<double>, 2> cond_probs;
  std::vector<double> marginals;

  // Validates row normalization and entry ranges; fills marginals.
  static MeasurementStatistics make(std::vector<double> row1,
                                    std::vector<double> row2);
};

// I(A:B) = sum_ij P_i P(j|i) log2( P(j|i) / P_j ), priors (1/2, 1/2).
double mutual_information(const MeasurementStatistics& stats);

// (1/2)[(1+q)log2(1+q) + (1-q)log2(1-q)] for q in [0, 1]: the mutual
// information of a binary symmetric pair with distinguishability q.
double binary_info_from_q(double q);

// One-state copied information of a copier output: binary_info_from_q(q).
double one_state_info(const CopierOutput& out);

// S(p1 rho1 + (1-p1) rho2) - p1 S(rho1) - (1-p1) S(rho2).
double holevo_two_state(const DensityMatrix2& rho1, const DensityMatrix2& rho2,
                        double p1);

// Holevo information of the symmetric equal-length Bloch pair with
// common length r and half-angle parameter q_H <= r.
double ultimate_info_from_bloch(double r, double q_H);

// Information extractable from the uncopied signal states: one at a
// time, and with block coding (the Holevo bound of the pure inputs).
double i1_baseline(double f);
double ih_baseline(double f);

// Maximum mutual information over projective measurements in the plane
// spanned by the two Bloch vectors: 2048-angle scan plus golden-section
// refinement to 1e-10 in angle. Deterministic; ties resolve to the
// smaller angle.
double accessible_info_scan(const DensityMatrix2& rho1,
                            const DensityMatrix2& rho2);

}  // namespace qcopy
