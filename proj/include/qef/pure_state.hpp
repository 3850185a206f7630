#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <utility>

#include "qef/linalg.hpp"
#include "qef/measures.hpp"

namespace qef {

enum class Subsystem { A, B };

/// Squared-norm deviation tolerated when a state is constructed without
/// normalization.
inline constexpr double kNormTol = 1e-10;

/// A two-qubit pure state a|00> + b|01> + c|10> + d|11>, kept normalized.
template <std::floating_point Scalar>
class PureState {
 public:
  /// Validates or normalizes the amplitude vector. Throws ZeroVector for a
  /// null input and NotNormalized when `normalize` is false and
  /// | |amps|^2 - 1 | exceeds kNormTol.
  PureState(const Vector4c<Scalar>& amps, bool normalize) : amp_(amps) {
    const Scalar n2 = amp_.squaredNorm();
    if (!(n2 > Scalar(0))) throw ZeroVector();
    if (normalize) {
      amp_ /= std::sqrt(n2);
    } else if (std::abs(n2 - Scalar(1)) > Scalar(kNormTol)) {
      throw NotNormalized(static_cast<double>(std::abs(n2 - Scalar(1))), kNormTol);
    }
  }

  const Vector4c<Scalar>& amplitudes() const { return amp_; }
  std::complex<Scalar> a() const { return amp_[0]; }
  std::complex<Scalar> b() const { return amp_[1]; }
  std::complex<Scalar> c() const { return amp_[2]; }
  std::complex<Scalar> d() const { return amp_[3]; }

 private:
  Vector4c<Scalar> amp_;
};

template <std::floating_point Scalar>
PureState<Scalar> make_pure_state(std::complex<Scalar> a, std::complex<Scalar> b,
                                  std::complex<Scalar> c, std::complex<Scalar> d,
                                  bool normalize = false) {
  Vector4c<Scalar> amps;
  amps << a, b, c, d;
  return PureState<Scalar>(amps, normalize);
}

/// Projector |psi><psi| as a 4x4 matrix (Hermitian, trace 1, rank 1).
template <std::floating_point Scalar>
Matrix4c<Scalar> density_matrix(const PureState<Scalar>& psi) {
  return psi.amplitudes() * psi.amplitudes().adjoint();
}

/// Reduced density matrix of one qubit, obtained by tracing out the other.
template <std::floating_point Scalar>
Matrix2c<Scalar> reduce(const PureState<Scalar>& psi, Subsystem which) {
  const auto a = psi.a();
  const auto b = psi.b();
  const auto c = psi.c();
  const auto d = psi.d();
  Matrix2c<Scalar> rho;
  if (which == Subsystem::A) {
    rho << std::norm(a) + std::norm(b), a * std::conj(c) + b * std::conj(d),
           std::conj(a) * c + std::conj(b) * d, std::norm(c) + std::norm(d);
  } else {
    rho << std::norm(a) + std::norm(c), a * std::conj(b) + c * std::conj(d),
           std::conj(a) * b + std::conj(c) * d, std::norm(b) + std::norm(d);
  }
  return rho;
}

/// Concurrence of a pure state, 2|ad - bc|, clamped into [0, 1].
template <std::floating_point Scalar>
Scalar concurrence(const PureState<Scalar>& psi) {
  const Scalar raw = Scalar(2) * std::abs(psi.a() * psi.d() - psi.b() * psi.c());
  return std::clamp(raw, Scalar(0), Scalar(1));
}

/// Eigenvalues (lambda1 >= lambda2, lambda1 + lambda2 = 1) shared by both
/// reduced density matrices, in the closed form driven by the concurrence.
template <std::floating_point Scalar>
std::pair<Scalar, Scalar> reduced_eigenvalues(const PureState<Scalar>& psi) {
  return schmidt_eigenvalues(concurrence(psi));
}

}  // namespace qef
