#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qcopy/infomeasures.hpp"
#include "qcopy/optimizer.hpp"
#include "qcopy/sweep.hpp"

using namespace qcopy;

namespace {

double xlog2d(double p) { return p <= 0.0 ? 0.0 : p * std::log2(p); }

DensityMatrix2 random_mixed(std::mt19937& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  const double x = normal(rng), y = normal(rng), z = normal(rng);
  const double n = std::sqrt(x * x + y * y + z * z);
  const double s = n > 0 ? radius(rng) / n : 0.0;
  return state_from_bloch({x * s, y * s, z * s});
}

}  // namespace

TEST_CASE("binary information of a symmetric pair") {
  CHECK(binary_info_from_q(0.0) == doctest::Approx(0.0));
  CHECK(binary_info_from_q(1.0) == doctest::Approx(1.0));
  CHECK(binary_info_from_q(std::sqrt(0.5)) ==
        doctest::Approx(0.3991239633071439).epsilon(1e-14));
  // Monotone in q.
  double prev = -1.0;
  for (int i = 0; i <= 100; ++i) {
    const double v = binary_info_from_q(i / 100.0);
    CHECK(v >= prev);
    prev = v;
  }
  CHECK_THROWS_AS(binary_info_from_q(-0.1), std::domain_error);
  CHECK_THROWS_AS(binary_info_from_q(1.1), std::domain_error);
  CHECK(binary_info_from_q(1.0 + 1e-13) == doctest::Approx(1.0));
}

TEST_CASE("one-state information of copier outputs") {
  for (int i = 0; i <= 20; ++i) {
    const double f = i / 20.0;
    CHECK(one_state_info(wz_copier(make_ensemble(f))) ==
          doctest::Approx(i1_baseline(f)).epsilon(1e-14));
  }
  CHECK(one_state_info(uqcm_copier(make_ensemble(0.0))) ==
        doctest::Approx(0.3499775783516458).epsilon(1e-13));
  for (CopierFamily family : kAllCopiers) {
    CHECK(one_state_info(run_copier(family, make_ensemble(1.0))) ==
          doctest::Approx(0.0).epsilon(1e-12));
  }
}

TEST_CASE("holevo bound of a two-state ensemble") {
  const DensityMatrix2 rho = state_from_bloch({0.2, 0.1, -0.3});
  CHECK(holevo_two_state(rho, rho, 0.5) == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(holevo_two_state(DensityMatrix2::pure(1, 0), DensityMatrix2::pure(0, 1),
                         0.5) == doctest::Approx(1.0).epsilon(1e-13));

  // Diagonal copies: the Holevo bound reduces to the Shannon value.
  const CopierOutput wz = wz_copier(make_ensemble(0.5));
  CHECK(holevo_two_state(wz.copy1, wz.copy2, 0.5) ==
        doctest::Approx(0.3991239633071439).epsilon(1e-13));

  // Asymmetric priors on orthogonal states give the prior entropy.
  const double p1 = 0.3;
  const double expected = -xlog2d(p1) - xlog2d(1 - p1);
  CHECK(holevo_two_state(DensityMatrix2::pure(1, 0), DensityMatrix2::pure(0, 1),
                         p1) == doctest::Approx(expected).epsilon(1e-13));
  CHECK_THROWS_AS(holevo_two_state(rho, rho, 1.5), std::domain_error);
}

TEST_CASE("holevo information from bloch parameters") {
  CHECK(ultimate_info_from_bloch(1.0, 0.0) == doctest::Approx(1.0));
  for (double r : {0.2, 0.6, 1.0}) {
    CHECK(ultimate_info_from_bloch(r, r) == doctest::Approx(0.0));
  }
  // Cross-oracle equality with the density-matrix route (uqcm at f=0.5).
  const CopierOutput uq = uqcm_copier(make_ensemble(0.5));
  CHECK(std::abs(ultimate_info_from_bloch(uq.r, uq.q_h) -
                 holevo_two_state(uq.copy1, uq.copy2, 0.5)) < 1e-10);
  CHECK_THROWS_AS(ultimate_info_from_bloch(0.5, 0.6), std::domain_error);
}

TEST_CASE("baselines for the uncopied signal") {
  CHECK(i1_baseline(0.0) == doctest::Approx(1.0));
  CHECK(ih_baseline(0.0) == doctest::Approx(1.0));
  CHECK(i1_baseline(1.0) == doctest::Approx(0.0));
  CHECK(ih_baseline(1.0) == doctest::Approx(0.0));
  CHECK(i1_baseline(0.5) == doctest::Approx(0.3991239633071439).epsilon(1e-14));
  CHECK(ih_baseline(0.5) == doctest::Approx(0.6008760366928561).epsilon(1e-14));

  for (int i = 0; i <= 50; ++i) {
    const double f = i / 50.0;
    CHECK(ih_baseline(f) >= i1_baseline(f) - 1e-12);
    if (i != 0 && i != 50) {
      CHECK(ih_baseline(f) > i1_baseline(f));
    }
    // The pure-input Holevo quantity is the same bound.
    const InputEnsemble ens = make_ensemble(f);
    CHECK(std::abs(ih_baseline(f) -
                   holevo_two_state(ens.state1(), ens.state2(), 0.5)) < 1e-12);
  }
  CHECK_THROWS_AS(i1_baseline(-0.2), std::domain_error);
  CHECK_THROWS_AS(ih_baseline(1.2), std::domain_error);
}

TEST_CASE("measurement scan on degenerate and orthogonal pairs") {
  const DensityMatrix2 rho = state_from_bloch({0.3, 0.0, 0.2});
  CHECK(accessible_info_scan(rho, rho) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(accessible_info_scan(DensityMatrix2::pure(1, 0),
                             DensityMatrix2::pure(0, 1)) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("measurement scan reproduces the analytic one-state value") {
  const CopierOutput wz = wz_copier(make_ensemble(0.5));
  CHECK(std::abs(accessible_info_scan(wz.copy1, wz.copy2) -
                 0.3991239633071439) < 1e-6);

  // Equal-length pairs tilted out of the computational basis.
  std::mt19937 rng(31337);
  std::uniform_real_distribution<double> angle(0.0, 3.141592653589793);
  std::uniform_real_distribution<double> radius(0.05, 1.0);
  for (int i = 0; i < 60; ++i) {
    const double r = radius(rng);
    const double alpha = angle(rng);
    const double beta = angle(rng);
    const BlochVector v1{r * std::sin(alpha), 0.0, r * std::cos(alpha)};
    const BlochVector v2{r * std::sin(beta), 0.0, r * std::cos(beta)};
    const double q =
        0.5 * std::hypot(v1.x - v2.x, v1.z - v2.z);
    CHECK(std::abs(accessible_info_scan(state_from_bloch(v1),
                                        state_from_bloch(v2)) -
                   binary_info_from_q(q)) < 1e-6);
  }
}

TEST_CASE("scan never exceeds the holevo bound") {
  std::mt19937 rng(2025);
  for (int i = 0; i < 120; ++i) {
    const DensityMatrix2 rho1 = random_mixed(rng);
    const DensityMatrix2 rho2 = random_mixed(rng);
    CHECK(accessible_info_scan(rho1, rho2) <=
          holevo_two_state(rho1, rho2, 0.5) + 1e-9);
  }
}

TEST_CASE("mutual information of conditional statistics") {
  const auto flat = MeasurementStatistics::make({0.6, 0.4}, {0.6, 0.4});
  CHECK(mutual_information(flat) == doctest::Approx(0.0).epsilon(1e-14));

  const auto ident = MeasurementStatistics::make({1.0, 0.0}, {0.0, 1.0});
  CHECK(mutual_information(ident) == doctest::Approx(1.0).epsilon(1e-14));

  const auto wz_rows = MeasurementStatistics::make(
      {0.8535533905932737, 0.1464466094067262},
      {0.1464466094067262, 0.8535533905932737});
  CHECK(mutual_information(wz_rows) ==
        doctest::Approx(0.3991239633071439).epsilon(1e-12));

  CHECK_THROWS_AS(MeasurementStatistics::make({0.7, 0.7}, {0.5, 0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(MeasurementStatistics::make({1.2, -0.2}, {0.5, 0.5}),
                  std::invalid_argument);
  CHECK_THROWS_AS(MeasurementStatistics::make({0.5, 0.5}, {1.0}),
                  std::invalid_argument);
}

TEST_CASE("scan maximum equals the mutual information of its statistics") {
  // The measurement along the Bloch-difference direction induces the
  // conditional rows (1+-q)/2; their mutual information must agree with
  // the scan maximum.
  const CopierOutput out = global_fid_copier(make_ensemble(0.3));
  const auto stats = MeasurementStatistics::make(
      {0.5 * (1 + out.q), 0.5 * (1 - out.q)},
      {0.5 * (1 - out.q), 0.5 * (1 + out.q)});
  CHECK(std::abs(accessible_info_scan(out.copy1, out.copy2) -
                 mutual_information(stats)) < 1e-9);
}

TEST_CASE("holevo information is monotone in r and q_H") {
  for (int i = 1; i <= 20; ++i) {
    const double r = i / 20.0;
    for (int j = 0; j < i; ++j) {
      const double qh = j / 20.0;
      const double base = ultimate_info_from_bloch(r, qh);
      if (i < 20) {
        CHECK(ultimate_info_from_bloch(r + 0.05, qh) >= base - 1e-12);
      }
      CHECK(ultimate_info_from_bloch(r, qh + 0.05) <= base + 1e-12);
    }
  }
}
