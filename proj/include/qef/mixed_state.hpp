#pragma once

#include <Eigen/SVD>
#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>

#include "qef/linalg.hpp"
#include "qef/pure_state.hpp"

namespace qef {

template <std::floating_point Scalar>
class DensityMatrix;

template <std::floating_point Scalar>
DensityMatrix<Scalar> validate_density_matrix(const Matrix4c<Scalar>& m);

/// Validation tolerances for two-qubit density matrices.
inline constexpr double kDensityHermitianTol = 1e-9;
inline constexpr double kDensityTraceTol = 1e-9;
inline constexpr double kDensityEigenvalueFloor = -1e-9;

/// A validated two-qubit density matrix: Hermitian, unit trace, positive
/// semidefinite within the tolerances above. Construct through
/// validate_density_matrix(); the stored matrix is the Hermitian part
/// (M + M^dagger)/2 of the input, so it is exactly Hermitian.
template <std::floating_point Scalar>
class DensityMatrix {
 public:
  const Matrix4c<Scalar>& matrix() const { return m_; }

 private:
  explicit DensityMatrix(const Matrix4c<Scalar>& m) : m_(m) {}
  friend DensityMatrix validate_density_matrix<Scalar>(const Matrix4c<Scalar>&);
  Matrix4c<Scalar> m_;
};

template <std::floating_point Scalar>
DensityMatrix<Scalar> validate_density_matrix(const Matrix4c<Scalar>& m) {
  if (!m.allFinite()) throw OutOfDomain("density matrix has a non-finite entry");
  const Scalar defect = hermiticity_defect<Scalar, 4>(m);
  if (defect > Scalar(kDensityHermitianTol)) {
    throw NotHermitian(static_cast<double>(defect), kDensityHermitianTol);
  }
  const Matrix4c<Scalar> sym = ((m + m.adjoint()) * std::complex<Scalar>(Scalar(0.5), 0)).eval();
  const Scalar trace_dev = std::abs(sym.trace() - std::complex<Scalar>(1, 0));
  if (trace_dev > Scalar(kDensityTraceTol)) {
    throw BadTrace(static_cast<double>(trace_dev), kDensityTraceTol);
  }
  Eigen::SelfAdjointEigenSolver<Matrix4c<Scalar>> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NoConvergence("eigensolver failed while validating density matrix");
  }
  const Scalar min_eig = solver.eigenvalues().minCoeff();
  if (min_eig < Scalar(kDensityEigenvalueFloor)) {
    throw NotPositiveSemiDefinite(static_cast<double>(min_eig), kDensityEigenvalueFloor);
  }
  return DensityMatrix<Scalar>(sym);
}

/// The spin-flip operator sigma_y (x) sigma_y. In the fixed product basis it
/// is the real matrix with entries (0,3) = (3,0) = -1 and (1,2) = (2,1) = +1.
template <std::floating_point Scalar>
Matrix4c<Scalar> spin_flip_matrix() {
  Matrix4c<Scalar> f = Matrix4c<Scalar>::Zero();
  f(0, 3) = f(3, 0) = std::complex<Scalar>(-1, 0);
  f(1, 2) = f(2, 1) = std::complex<Scalar>(1, 0);
  return f;
}

/// Spin-flipped state rho~ = (sigma_y (x) sigma_y) rho^* (sigma_y (x) sigma_y).
template <std::floating_point Scalar>
Matrix4c<Scalar> spin_flip(const Matrix4c<Scalar>& rho) {
  const Matrix4c<Scalar> f = spin_flip_matrix<Scalar>();
  return f * rho.conjugate() * f;
}

template <std::floating_point Scalar>
Matrix4c<Scalar> spin_flip(const DensityMatrix<Scalar>& rho) {
  return spin_flip(rho.matrix());
}

/// Concurrence of a mixed state together with the four sqrt-eigenvalues
/// sqrt(lambda_i) of R = rho rho~, sorted descending.
template <std::floating_point Scalar>
struct WoottersSpectrum {
  Scalar concurrence;
  Eigen::Matrix<Scalar, 4, 1> sqrt_eigenvalues;
};

namespace detail {

template <std::floating_point Scalar>
Matrix4c<Scalar> clamped_sqrt(const DensityMatrix<Scalar>& rho) {
  // Validation already bounds eigenvalues from below by the -1e-9 floor, so
  // anything negative here is round-off to clamp, never an error.
  const auto es = hermitian_eigen<Scalar, 4>(rho.matrix());
  return sqrt_from_eigen<Scalar, 4>(es, Scalar(kDensityEigenvalueFloor));
}

}  // namespace detail

/// Eigenvalue route to the Wootters spectrum: the Hermitian PSD matrix
/// M = sqrt(rho) rho~ sqrt(rho), which shares the spectrum of R = rho rho~
/// (spectra of AB and BA coincide) while staying Hermitian even when rho is
/// singular. Exposed for cross-checks; the concurrence itself is computed by
/// the better-conditioned singular-value route below.
template <std::floating_point Scalar>
Matrix4c<Scalar> wootters_hermitian_matrix(const DensityMatrix<Scalar>& rho) {
  const Matrix4c<Scalar> root = detail::clamped_sqrt(rho);
  return root * spin_flip(rho) * root;
}

/// Hill-Wootters concurrence C = max{0, sqrt(l1) - sqrt(l2) - sqrt(l3) -
/// sqrt(l4)} over the descending eigenvalues l_i of R = rho rho~.
///
/// The sqrt(l_i) are obtained as the singular values of
///   Y = sqrt(rho) F sqrt(rho)^*,   F = sigma_y (x) sigma_y,
/// since Y Y^dagger = sqrt(rho) rho~ sqrt(rho) = M. Reading them off an SVD
/// instead of taking square roots of eigenvalues of M keeps tiny spectrum
/// entries at absolute accuracy ~1e-15; the eigenvalue route loses them to
/// sqrt-amplified round-off (~1e-8) whenever rho is nearly singular.
template <std::floating_point Scalar>
WoottersSpectrum<Scalar> wootters_spectrum(const DensityMatrix<Scalar>& rho) {
  const Matrix4c<Scalar> root = detail::clamped_sqrt(rho);
  const Matrix4c<Scalar> y = root * spin_flip_matrix<Scalar>() * root.conjugate();
  Eigen::JacobiSVD<Matrix4c<Scalar>> svd(y);
  WoottersSpectrum<Scalar> out;
  out.sqrt_eigenvalues = svd.singularValues();
  const auto& s = out.sqrt_eigenvalues;
  out.concurrence = std::clamp(s[0] - s[1] - s[2] - s[3], Scalar(0), Scalar(1));
  return out;
}

template <std::floating_point Scalar>
Scalar concurrence(const DensityMatrix<Scalar>& rho) {
  return wootters_spectrum(rho).concurrence;
}

/// The four Bell states in the sign convention
/// |Psi+-> = (|01> +- |10>)/sqrt(2), |Phi+-> = (|00> +- |11>)/sqrt(2).
enum class Bell { psi_plus, psi_minus, phi_plus, phi_minus };

template <std::floating_point Scalar>
PureState<Scalar> bell_state(Bell which) {
  using C = std::complex<Scalar>;
  switch (which) {
    case Bell::psi_plus:  return make_pure_state<Scalar>(C(0), C(1), C(1), C(0), true);
    case Bell::psi_minus: return make_pure_state<Scalar>(C(0), C(1), C(-1), C(0), true);
    case Bell::phi_plus:  return make_pure_state<Scalar>(C(1), C(0), C(0), C(1), true);
    default:              return make_pure_state<Scalar>(C(1), C(0), C(0), C(-1), true);
  }
}

/// Mixture weights over the four Bell states, in the order
/// |Psi+>, |Psi->, |Phi+>, |Phi->. Nonnegative, summing to one.
template <std::floating_point Scalar>
struct BellWeights {
  Scalar p_psi_plus;
  Scalar p_psi_minus;
  Scalar p_phi_plus;
  Scalar p_phi_minus;

  std::array<Scalar, 4> as_array() const {
    return {p_psi_plus, p_psi_minus, p_phi_plus, p_phi_minus};
  }
};

inline constexpr double kBellWeightSumTol = 1e-12;

template <std::floating_point Scalar>
BellWeights<Scalar> make_bell_weights(Scalar p1, Scalar p2, Scalar p3, Scalar p4) {
  for (Scalar p : {p1, p2, p3, p4}) {
    if (!(p >= Scalar(0)) || !std::isfinite(p)) {
      throw OutOfDomain("Bell weight = " + detail::num_str(static_cast<double>(p)) +
                        " is not a probability");
    }
  }
  const Scalar sum_dev = std::abs(p1 + p2 + p3 + p4 - Scalar(1));
  if (sum_dev > Scalar(kBellWeightSumTol)) {
    throw NotNormalized(static_cast<double>(sum_dev), kBellWeightSumTol);
  }
  return BellWeights<Scalar>{p1, p2, p3, p4};
}

/// Density matrix of a Bell mixture. Written out directly: diagonal
/// (p3+p4, p1+p2, p1+p2, p3+p4)/2, corners (p3-p4)/2, center (p1-p2)/2.
template <std::floating_point Scalar>
DensityMatrix<Scalar> bell_mixture(const BellWeights<Scalar>& w) {
  Matrix4c<Scalar> m = Matrix4c<Scalar>::Zero();
  const Scalar half = Scalar(0.5);
  m(0, 0) = m(3, 3) = half * (w.p_phi_plus + w.p_phi_minus);
  m(1, 1) = m(2, 2) = half * (w.p_psi_plus + w.p_psi_minus);
  m(0, 3) = m(3, 0) = half * (w.p_phi_plus - w.p_phi_minus);
  m(1, 2) = m(2, 1) = half * (w.p_psi_plus - w.p_psi_minus);
  return validate_density_matrix(m);
}

/// Closed-form concurrence of a Bell mixture: 2 p_max - 1 when the largest
/// weight exceeds 1/2, else 0.
template <std::floating_point Scalar>
Scalar bell_concurrence(const BellWeights<Scalar>& w) {
  const auto p = w.as_array();
  const Scalar p_max = *std::max_element(p.begin(), p.end());
  return p_max > Scalar(0.5) ? Scalar(2) * p_max - Scalar(1) : Scalar(0);
}

}  // namespace qef
