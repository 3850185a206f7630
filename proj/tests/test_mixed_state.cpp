#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "qef/mixed_state.hpp"

using namespace qef;
using std::complex;

TEST_CASE("validate_density_matrix: accepts physical states") {
  CHECK_NOTHROW(validate_density_matrix<double>(
      (Matrix4cd::Identity() * complex<double>(0.25, 0.0)).eval()));
  CHECK_NOTHROW(validate_density_matrix<double>(density_matrix(bell_state<double>(Bell::phi_plus))));
}

TEST_CASE("validate_density_matrix: names the violated invariant") {
  Matrix4cd negative = Matrix4cd::Zero();
  negative(0, 0) = 0.6; negative(1, 1) = 0.6; negative(2, 2) = -0.1; negative(3, 3) = -0.1;
  CHECK_THROWS_WITH_AS(validate_density_matrix<double>(negative),
                       doctest::Contains("NotPositiveSemiDefinite"),
                       NotPositiveSemiDefinite);

  Matrix4cd skew = (Matrix4cd::Identity() * complex<double>(0.25, 0.0)).eval();
  skew(0, 1) = complex<double>(1e-3, 0.0);
  CHECK_THROWS_WITH_AS(validate_density_matrix<double>(skew),
                       doctest::Contains("0.001"), NotHermitian);

  Matrix4cd heavy = (Matrix4cd::Identity() * complex<double>(0.3, 0.0)).eval();
  CHECK_THROWS_WITH_AS(validate_density_matrix<double>(heavy),
                       doctest::Contains("BadTrace"), BadTrace);

  Matrix4cd poisoned = (Matrix4cd::Identity() * complex<double>(0.25, 0.0)).eval();
  poisoned(2, 3) = complex<double>(std::nan(""), 0.0);
  CHECK_THROWS_AS(validate_density_matrix<double>(poisoned), OutOfDomain);
}

TEST_CASE("validate_density_matrix: symmetrizes last-digit asymmetry") {
  Matrix4cd m = (Matrix4cd::Identity() * complex<double>(0.25, 0.0)).eval();
  m(0, 1) = complex<double>(0.01, 1e-12);
  m(1, 0) = complex<double>(0.01, -1e-12 + 1e-13);
  const auto rho = validate_density_matrix<double>(m);
  CHECK(hermiticity_defect<double, 4>(rho.matrix()) == 0.0);
}

TEST_CASE("spin_flip: fixed points and basis exchange") {
  const Matrix4cd mixed = (Matrix4cd::Identity() * complex<double>(0.25, 0.0)).eval();
  CHECK((spin_flip<double>(mixed) - mixed).cwiseAbs().maxCoeff() == 0.0);

  const Matrix4cd singlet = density_matrix(bell_state<double>(Bell::psi_minus));
  CHECK((spin_flip<double>(singlet) - singlet).cwiseAbs().maxCoeff() <= 1e-15);

  Matrix4cd ground = Matrix4cd::Zero();
  ground(0, 0) = 1.0;
  Matrix4cd top = Matrix4cd::Zero();
  top(3, 3) = 1.0;
  CHECK((spin_flip<double>(ground) - top).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("spin_flip is an involution") {
  std::mt19937_64 gen(41);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rho = testutil::random_mixed_state(gen);
    const Matrix4cd twice = spin_flip<double>(spin_flip<double>(rho.matrix()));
    CHECK((twice - rho.matrix()).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("wootters_spectrum: pure states reduce to 2|ad - bc|") {
  std::mt19937_64 gen(43);
  double worst = 0.0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto psi = testutil::haar_state(gen);
    const auto rho = validate_density_matrix<double>(density_matrix(psi));
    worst = std::max(worst, std::abs(wootters_spectrum(rho).concurrence - concurrence(psi)));
  }
  CHECK(worst <= 1e-9);
}

TEST_CASE("wootters_spectrum: Werner state and maximally mixed state") {
  const auto werner = bell_mixture(make_bell_weights(1.0 / 12, 0.75, 1.0 / 12, 1.0 / 12));
  CHECK(wootters_spectrum(werner).concurrence == doctest::Approx(0.5).epsilon(1e-12));

  const auto mixed = validate_density_matrix<double>(
      (Matrix4cd::Identity() * complex<double>(0.25, 0.0)).eval());
  const auto spectrum = wootters_spectrum(mixed);
  CHECK(spectrum.concurrence == 0.0);
  for (int i = 0; i < 4; ++i) {
    CHECK(spectrum.sqrt_eigenvalues[i] == doctest::Approx(0.25).epsilon(1e-12));
  }
}

TEST_CASE("wootters_spectrum: Bell-mixture sqrt-eigenvalues are the sorted weights") {
  std::mt19937_64 gen(47);
  double worst_c = 0.0, worst_p = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    auto w = testutil::dirichlet_weights(gen);
    const auto weights = make_bell_weights(w[0], w[1], w[2], w[3]);
    const auto spectrum = wootters_spectrum(bell_mixture(weights));
    worst_c = std::max(worst_c,
                       std::abs(spectrum.concurrence - bell_concurrence(weights)));
    std::sort(w.begin(), w.end(), std::greater<>());
    for (int i = 0; i < 4; ++i) {
      worst_p = std::max(worst_p, std::abs(spectrum.sqrt_eigenvalues[i] - w[static_cast<size_t>(i)]));
    }
  }
  CHECK(worst_c <= 1e-9);
  CHECK(worst_p <= 1e-9);
}

TEST_CASE("wootters_hermitian_matrix: Hermitian, PSD, spectrum matches the SVD route") {
  std::mt19937_64 gen(53);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rho = testutil::random_mixed_state(gen);
    const Matrix4cd m = wootters_hermitian_matrix(rho);
    CHECK(hermiticity_defect<double, 4>(m) <= 1e-10);
    const auto es = hermitian_eigen<double, 4>(m);
    CHECK(es.values.minCoeff() >= -1e-10);
    const auto spectrum = wootters_spectrum(rho);
    for (int i = 0; i < 4; ++i) {
      const double sq = spectrum.sqrt_eigenvalues[i];
      CHECK(std::abs(std::max(es.values[i], 0.0) - sq * sq) <= 1e-12);
    }
  }
}

TEST_CASE("bell_mixture: pinned patterns") {
  const auto pure_psi_plus = bell_mixture(make_bell_weights(1.0, 0.0, 0.0, 0.0));
  const Matrix4cd direct = density_matrix(bell_state<double>(Bell::psi_plus));
  CHECK((pure_psi_plus.matrix() - direct).cwiseAbs().maxCoeff() <= 1e-15);

  const auto uniform = bell_mixture(make_bell_weights(0.25, 0.25, 0.25, 0.25));
  CHECK((uniform.matrix() - Matrix4cd::Identity() * complex<double>(0.25, 0.0))
            .cwiseAbs()
            .maxCoeff() == 0.0);
}

TEST_CASE("bell_mixture matches the explicit projector sum") {
  std::mt19937_64 gen(59);
  const Bell states[] = {Bell::psi_plus, Bell::psi_minus, Bell::phi_plus, Bell::phi_minus};
  for (int trial = 0; trial < 50; ++trial) {
    const auto w = testutil::dirichlet_weights(gen);
    Matrix4cd sum = Matrix4cd::Zero();
    for (int i = 0; i < 4; ++i) {
      sum += w[static_cast<size_t>(i)] * density_matrix(bell_state<double>(states[i]));
    }
    const auto built = bell_mixture(make_bell_weights(w[0], w[1], w[2], w[3]));
    CHECK((built.matrix() - sum).cwiseAbs().maxCoeff() <= 1e-12);
  }
}

TEST_CASE("bell_concurrence: threshold form") {
  CHECK(bell_concurrence(make_bell_weights(1.0, 0.0, 0.0, 0.0)) == 1.0);
  CHECK(bell_concurrence(make_bell_weights(0.05, 0.75, 0.1, 0.1)) ==
        doctest::Approx(0.5).epsilon(1e-15));
  CHECK(bell_concurrence(make_bell_weights(0.25, 0.25, 0.25, 0.25)) == 0.0);
}

TEST_CASE("make_bell_weights: validation") {
  CHECK_THROWS_AS(make_bell_weights(-0.1, 0.5, 0.3, 0.3), OutOfDomain);
  CHECK_THROWS_AS(make_bell_weights(0.3, 0.3, 0.3, 0.3), NotNormalized);
}
