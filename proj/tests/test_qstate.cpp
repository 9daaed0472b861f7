#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "qcopy/qstate.hpp"
#include "support/oracles.hpp"

using namespace qcopy;

namespace {

JointPureState random_joint(std::mt19937& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  std::array<complexd, 4> raw;
  for (auto& a : raw) a = complexd(normal(rng), normal(rng));
  return JointPureState::normalized(raw);
}

std::pair<complexd, complexd> random_pure(std::mt19937& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  complexd a(normal(rng), normal(rng));
  complexd b(normal(rng), normal(rng));
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  return {a / n, b / n};
}

}  // namespace

TEST_CASE("partial trace of product and entangled states") {
  const JointPureState pp({complexd(1), 0, 0, 0});
  const DensityMatrix2 left = partial_trace(pp, Subsystem::first);
  CHECK(left.diag(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(left.diag(1) == doctest::Approx(0.0).epsilon(1e-14));

  const double s = 1.0 / std::sqrt(2.0);
  const JointPureState bell({complexd(s), 0, 0, complexd(s)});
  for (Subsystem keep : {Subsystem::first, Subsystem::second}) {
    const DensityMatrix2 rho = partial_trace(bell, keep);
    CHECK(rho.diag(0) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(rho.off()) < 1e-14);
  }
}

TEST_CASE("partial trace matches the 4x4 contraction oracle") {
  // Basis-copier output for the first signal state at f = 0.5.
  const double theta = 0.5 * std::asin(std::sqrt(0.5));
  const JointPureState out(
      {complexd(std::cos(theta)), 0, 0, complexd(std::sin(theta))});
  const auto oracle = testsupport::dm4_partial_trace(out.amplitudes(), true);
  const DensityMatrix2 lib = partial_trace(out, Subsystem::first);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      CHECK(std::abs(lib.entry(i, j) - oracle[i][j]) < 1e-14);
    }
  }
  CHECK(lib.diag(0) == doctest::Approx(0.8535533905932737).epsilon(1e-13));
  CHECK(lib.diag(1) == doctest::Approx(0.1464466094067262).epsilon(1e-13));
}

TEST_CASE("bloch conversion") {
  const BlochVector up = bloch_from_state(
      DensityMatrix2::from_entries(complexd(1), 0, 0, complexd(0)));
  CHECK(up.x == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(up.z == doctest::Approx(1.0).epsilon(1e-14));

  const BlochVector mixed = bloch_from_state(DensityMatrix2{});
  CHECK(mixed.norm() < 1e-14);

  // Equal-length pair member with r = 0.8 rotated by pi/2 from the pole.
  const double r = 0.8;
  const double phi = 1.5707963267948966;
  const DensityMatrix2 rho = DensityMatrix2::from_entries(
      complexd(0.5 * (1 + r * std::cos(phi))), complexd(0.5 * r * std::sin(phi)),
      complexd(0.5 * r * std::sin(phi)), complexd(0.5 * (1 - r * std::cos(phi))));
  const BlochVector v = bloch_from_state(rho);
  CHECK(v.x == doctest::Approx(0.8).epsilon(1e-13));
  CHECK(std::abs(v.y) < 1e-14);
  CHECK(std::abs(v.z) < 1e-13);  // r cos(pi/2) ~ 5e-17

  CHECK_THROWS_AS(state_from_bloch({1.2, 0.0, 0.0}), std::domain_error);
  // Rounding-band norms are accepted and land on the sphere.
  const DensityMatrix2 band = state_from_bloch({1.0 + 5e-10, 0.0, 0.0});
  CHECK(bloch_from_state(band).norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("bloch round trip is the identity on the unit ball") {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    BlochVector v{unit(rng), unit(rng), unit(rng)};
    const double n = v.norm();
    if (n > 1.0) {
      v = {v.x / n, v.y / n, v.z / n};
    }
    const BlochVector back = bloch_from_state(state_from_bloch(v));
    CHECK(std::abs(back.x - v.x) < 1e-12);
    CHECK(std::abs(back.y - v.y) < 1e-12);
    CHECK(std::abs(back.z - v.z) < 1e-12);
  }
}

TEST_CASE("von Neumann entropy") {
  CHECK(von_neumann_entropy(DensityMatrix2::pure(1, 0)) ==
        doctest::Approx(0.0).epsilon(1e-14));
  CHECK(von_neumann_entropy(DensityMatrix2{}) ==
        doctest::Approx(1.0).epsilon(1e-14));
  const DensityMatrix2 half = state_from_bloch({0.0, 0.0, 0.5});
  CHECK(von_neumann_entropy(half) ==
        doctest::Approx(0.8112781244591328).epsilon(1e-13));
  // Cross-check against the eigen-decomposition oracle.
  CHECK(von_neumann_entropy(half) ==
        doctest::Approx(testsupport::entropy_eigen_oracle(
                            half.entry(0, 0), half.entry(0, 1), half.entry(1, 1)))
            .epsilon(1e-13));
}

TEST_CASE("entropy is invariant under unitary conjugation") {
  std::mt19937 rng(777);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    BlochVector v{normal(rng), normal(rng), normal(rng)};
    const double n = v.norm();
    const double scale = n > 0 ? radius(rng) / n : 0.0;
    const DensityMatrix2 rho =
        state_from_bloch({v.x * scale, v.y * scale, v.z * scale});
    const auto [u0, u1] = random_pure(rng);
    const complexd m[2][2] = {{u0, -std::conj(u1)}, {u1, std::conj(u0)}};
    complexd rot[2][2] = {{0, 0}, {0, 0}};
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        for (int p = 0; p < 2; ++p) {
          for (int q = 0; q < 2; ++q) {
            rot[a][b] += m[a][p] * rho.entry(p, q) * std::conj(m[b][q]);
          }
        }
      }
    }
    const DensityMatrix2 conj =
        DensityMatrix2::from_entries(rot[0][0], rot[0][1], rot[1][0], rot[1][1]);
    CHECK(std::abs(von_neumann_entropy(conj) - von_neumann_entropy(rho)) <
          1e-10);
  }
}

TEST_CASE("fidelity closed form") {
  const DensityMatrix2 mixed = state_from_bloch({0.3, -0.2, 0.4});
  CHECK(fidelity_mixed(mixed, mixed) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(fidelity_mixed(DensityMatrix2::pure(1, 0), DensityMatrix2::pure(0, 1)) ==
        doctest::Approx(0.0).epsilon(1e-14));

  // Local fidelity of a basis-copier copy at f = 0.5 is 1 - f/2.
  const double theta = 0.5 * std::asin(std::sqrt(0.5));
  const DensityMatrix2 input =
      DensityMatrix2::pure(std::cos(theta), std::sin(theta));
  const DensityMatrix2 copy = DensityMatrix2::from_entries(
      complexd(std::cos(theta) * std::cos(theta)), 0, 0,
      complexd(std::sin(theta) * std::sin(theta)));
  CHECK(fidelity_mixed(input, copy) == doctest::Approx(0.75).epsilon(1e-13));
}

TEST_CASE("fidelity of pure pairs equals the squared overlap") {
  std::mt19937 rng(4242);
  for (int i = 0; i < 300; ++i) {
    const auto [a0, a1] = random_pure(rng);
    const auto [b0, b1] = random_pure(rng);
    const double direct = std::norm(std::conj(a0) * b0 + std::conj(a1) * b1);
    CHECK(std::abs(fidelity_mixed(DensityMatrix2::pure(a0, a1),
                                  DensityMatrix2::pure(b0, b1)) -
                   direct) < 1e-12);
  }
}

TEST_CASE("overlap of joint states") {
  std::mt19937 rng(5);
  const JointPureState a = random_joint(rng);
  CHECK(overlap_sq(a, a) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(overlap_sq(JointPureState({complexd(1), 0, 0, 0}),
                   JointPureState({0, complexd(1), 0, 0})) ==
        doctest::Approx(0.0).epsilon(1e-14));

  // Basis-copier outputs at f = 0.36 stay at squared overlap f.
  const double theta = 0.5 * std::asin(0.6);
  const JointPureState j1(
      {complexd(std::cos(theta)), 0, 0, complexd(std::sin(theta))});
  const JointPureState j2(
      {complexd(std::sin(theta)), 0, 0, complexd(std::cos(theta))});
  CHECK(overlap_sq(j1, j2) == doctest::Approx(0.36).epsilon(1e-12));
}

TEST_CASE("random joint states reduce to valid density matrices") {
  std::mt19937 rng(99);
  for (int i = 0; i < 300; ++i) {
    const JointPureState state = random_joint(rng);
    for (Subsystem keep : {Subsystem::first, Subsystem::second}) {
      const DensityMatrix2 rho = partial_trace(state, keep);  // validates
      CHECK(std::abs(rho.trace() - 1.0) < 1e-12);
      CHECK(rho.det() > -1e-12);
    }
  }
}

TEST_CASE("construction rejects invalid inputs") {
  CHECK_THROWS_AS(DensityMatrix2::from_entries(complexd(0.5), complexd(0.3),
                                               complexd(0.1), complexd(0.5)),
                  std::invalid_argument);  // not Hermitian
  CHECK_THROWS_AS(DensityMatrix2::from_entries(complexd(0.8), 0, 0,
                                               complexd(0.4)),
                  std::invalid_argument);  // trace 1.2
  CHECK_THROWS_AS(DensityMatrix2::from_entries(complexd(1.2), 0, 0,
                                               complexd(-0.2)),
                  std::invalid_argument);  // negative eigenvalue
  CHECK_THROWS_AS(JointPureState({complexd(1), complexd(1), 0, 0}),
                  std::invalid_argument);  // norm 2
  CHECK_THROWS_AS(DensityMatrix2::pure(complexd(1), complexd(1)),
                  std::invalid_argument);
}
