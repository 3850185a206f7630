#pragma once

// Shared test utilities: a bit-reproducible random source (no
// implementation-defined std distributions) and long-double reference
// evaluations used as independent oracles.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

#include "qef/mixed_state.hpp"
#include "qef/pure_state.hpp"

namespace testutil {

// Uniform double in [0, 1) from the top 53 bits; identical on every platform.
inline double u01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Uniform double in (0, 1], safe to pass through log().
inline double u01_pos(std::mt19937_64& gen) { return 1.0 - u01(gen); }

// Standard complex Gaussian via Box-Muller (re and im are independent N(0,1)).
inline std::complex<double> complex_gaussian(std::mt19937_64& gen) {
  const double r = std::sqrt(-2.0 * std::log(u01_pos(gen)));
  const double theta = 2.0 * std::numbers::pi * u01(gen);
  return {r * std::cos(theta), r * std::sin(theta)};
}

// Haar-random pure state: four independent complex Gaussians, normalized.
inline qef::PureState<double> haar_state(std::mt19937_64& gen) {
  return qef::make_pure_state(complex_gaussian(gen), complex_gaussian(gen),
                              complex_gaussian(gen), complex_gaussian(gen), true);
}

// Uniform (flat Dirichlet) point on the probability simplex.
inline std::array<double, 4> dirichlet_weights(std::mt19937_64& gen) {
  std::array<double, 4> w{};
  double sum = 0.0;
  for (double& x : w) {
    x = -std::log(u01_pos(gen));
    sum += x;
  }
  for (double& x : w) x /= sum;
  return w;
}

// Random mixed state: Dirichlet-weighted mixture of four Haar-random pure
// states. Full rank almost surely.
inline qef::DensityMatrix<double> random_mixed_state(std::mt19937_64& gen) {
  const auto w = dirichlet_weights(gen);
  qef::Matrix4cd m = qef::Matrix4cd::Zero();
  for (double p : w) m += p * qef::density_matrix(haar_state(gen));
  return qef::validate_density_matrix(m);
}

// Random Hermitian matrix with O(1) entries.
template <int N>
inline qef::MatrixC<double, N> random_hermitian(std::mt19937_64& gen) {
  qef::MatrixC<double, N> a;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) a(i, j) = complex_gaussian(gen);
  return ((a + a.adjoint()) * std::complex<double>(0.5, 0.0)).eval();
}

// ---- long-double reference evaluations (independent oracle route) ----

inline long double ld_xlog2x(long double x) {
  return x == 0.0L ? 0.0L : x * std::log2(x);
}

inline long double ld_shannon(long double x) {
  return -ld_xlog2x(x) - ld_xlog2x(1.0L - x);
}

inline long double ld_moment(long double c, int k) {
  const long double s = std::sqrt((1.0L - c) * (1.0L + c));
  const long double l1 = (1.0L + s) / 2.0L;
  const long double l2 = (1.0L - s) / 2.0L;
  long double t1 = 0.0L, t2 = 0.0L;
  if (l1 > 0.0L) t1 = l1 * std::pow(std::log2(l1), static_cast<long double>(k));
  if (l2 > 0.0L) t2 = l2 * std::pow(std::log2(l2), static_cast<long double>(k));
  return (k % 2 == 0 ? 1.0L : -1.0L) * (t1 + t2);
}

inline long double ld_entanglement(long double c) { return ld_moment(c, 1); }

inline long double ld_fluctuation(long double c) {
  if (c == 0.0L) return 0.0L;
  const long double s = std::sqrt((1.0L - c) * (1.0L + c));
  return c * std::log2((1.0L + s) / c);
}

}  // namespace testutil
