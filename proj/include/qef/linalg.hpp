#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>

#include "qef/errors.hpp"

namespace qef {

template <std::floating_point Scalar, int N>
using MatrixC = Eigen::Matrix<std::complex<Scalar>, N, N>;

template <std::floating_point Scalar>
using Matrix2c = MatrixC<Scalar, 2>;

template <std::floating_point Scalar>
using Matrix4c = MatrixC<Scalar, 4>;

template <std::floating_point Scalar>
using Vector4c = Eigen::Matrix<std::complex<Scalar>, 4, 1>;

using Matrix2cd = Matrix2c<double>;
using Matrix4cd = Matrix4c<double>;
using Vector4cd = Vector4c<double>;

/// Default entrywise tolerance for Hermiticity checks.
inline constexpr double kHermitianTol = 1e-9;

/// Eigenvalues in [-kPsdClampTol, 0) count as round-off and are clamped to
/// zero in positive-semidefinite contexts; anything more negative is an error.
inline constexpr double kPsdClampTol = 1e-12;

template <std::floating_point Scalar, int N>
Scalar hermiticity_defect(const MatrixC<Scalar, N>& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Spectral decomposition of a Hermitian matrix. `values` are sorted
/// descending and `vectors.col(i)` is the orthonormal eigenvector of
/// `values[i]`.
template <std::floating_point Scalar, int N>
struct EigenSystem {
  Eigen::Matrix<Scalar, N, 1> values;
  MatrixC<Scalar, N> vectors;
};

/// Diagonalizes a Hermitian matrix. Throws NotHermitian if the entrywise
/// asymmetry exceeds `require_hermitian_tol` and NoConvergence if the
/// underlying iteration fails.
template <std::floating_point Scalar, int N>
EigenSystem<Scalar, N> hermitian_eigen(
    const MatrixC<Scalar, N>& m,
    Scalar require_hermitian_tol = Scalar(kHermitianTol)) {
  const Scalar defect = hermiticity_defect<Scalar, N>(m);
  if (!(defect <= require_hermitian_tol)) {
    throw NotHermitian(static_cast<double>(defect),
                       static_cast<double>(require_hermitian_tol));
  }
  Eigen::SelfAdjointEigenSolver<MatrixC<Scalar, N>> solver(m);
  if (solver.info() != Eigen::Success) {
    throw NoConvergence("Hermitian eigensolver did not converge");
  }
  // Eigen sorts ascending; downstream contracts want descending.
  EigenSystem<Scalar, N> out;
  for (int i = 0; i < N; ++i) {
    out.values[i] = solver.eigenvalues()[N - 1 - i];
    out.vectors.col(i) = solver.eigenvectors().col(N - 1 - i);
  }
  return out;
}

namespace detail {

// Rebuilds V sqrt(clamp(lambda)) V^dagger from a spectral decomposition.
// `clamp_floor` is the most negative eigenvalue accepted as round-off.
template <std::floating_point Scalar, int N>
MatrixC<Scalar, N> sqrt_from_eigen(const EigenSystem<Scalar, N>& es,
                                   Scalar clamp_floor) {
  Eigen::Matrix<Scalar, N, 1> roots;
  for (int i = 0; i < N; ++i) {
    const Scalar lam = es.values[i];
    if (lam < clamp_floor) {
      throw NotPositiveSemiDefinite(static_cast<double>(lam),
                                    static_cast<double>(clamp_floor));
    }
    roots[i] = std::sqrt(std::max(lam, Scalar(0)));
  }
  MatrixC<Scalar, N> root =
      es.vectors *
      roots.template cast<std::complex<Scalar>>().asDiagonal() *
      es.vectors.adjoint();
  // Symmetrize away the skew part introduced by the two products.
  return ((root + root.adjoint()) * std::complex<Scalar>(Scalar(0.5), 0)).eval();
}

}  // namespace detail

/// Principal square root of a Hermitian positive-semidefinite matrix.
/// Eigenvalues in [-kPsdClampTol, 0) are clamped to zero; more negative ones
/// raise NotPositiveSemiDefinite. The result N is Hermitian PSD with
/// N*N == M up to round-off.
template <std::floating_point Scalar, int N>
MatrixC<Scalar, N> psd_sqrt(const MatrixC<Scalar, N>& m) {
  return detail::sqrt_from_eigen(hermitian_eigen<Scalar, N>(m),
                                 Scalar(-kPsdClampTol));
}

}  // namespace qef
