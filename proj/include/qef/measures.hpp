#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

#include "qef/errors.hpp"

namespace qef {

/// Which endpoint of the concurrence interval an asymptotic expansion targets.
enum class Limit { near_zero, near_one };

namespace detail {

// Values this close to [0, 1] are treated as round-off and clamped.
inline constexpr double kDomainSlack = 1e-12;

template <std::floating_point Scalar>
Scalar checked_unit_interval(Scalar x, const char* name) {
  if (!(x >= -Scalar(kDomainSlack)) || !(x <= Scalar(1) + Scalar(kDomainSlack))) {
    throw OutOfDomain(std::string(name) + " = " + num_str(static_cast<double>(x)) +
                      " lies outside [0, 1]");
  }
  return std::clamp(x, Scalar(0), Scalar(1));
}

template <std::floating_point Scalar>
Scalar checked_open_unit_interval(Scalar x, const char* name) {
  if (!(x > Scalar(0)) || !(x < Scalar(1))) {
    throw OutOfDomain(std::string(name) + " = " + num_str(static_cast<double>(x)) +
                      " lies outside (0, 1)");
  }
  return x;
}

// x log2(x) with the limit convention 0 log 0 = 0.
template <std::floating_point Scalar>
Scalar xlog2x(Scalar x) {
  return x == Scalar(0) ? Scalar(0) : x * std::log2(x);
}

template <std::floating_point Scalar>
Scalar ipow(Scalar x, int k) {
  Scalar r = Scalar(1);
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace detail

/// Shannon function H(x) = -x log2(x) - (1-x) log2(1-x) in bits.
template <std::floating_point Scalar>
Scalar shannon_h(Scalar x) {
  x = detail::checked_unit_interval(x, "shannon_h argument");
  // + 0 turns an IEEE -0.0 at the endpoints into +0.0.
  return -detail::xlog2x(x) - detail::xlog2x(Scalar(1) - x) + Scalar(0);
}

/// Reduced-state spectrum {(1 + s)/2, (1 - s)/2} with s = sqrt(1 - C^2),
/// returned as (lambda1, lambda2) with lambda1 >= lambda2 and
/// lambda1 + lambda2 == 1 exactly. The small eigenvalue is computed as
/// C^2 / (2 (1 + s)), which keeps full relative precision near C = 0.
template <std::floating_point Scalar>
std::pair<Scalar, Scalar> schmidt_eigenvalues(Scalar c) {
  c = detail::checked_unit_interval(c, "concurrence");
  const Scalar s = std::sqrt(std::max(Scalar(0), (Scalar(1) - c) * (Scalar(1) + c)));
  const Scalar lambda2 = c * c / (Scalar(2) * (Scalar(1) + s));
  return {Scalar(1) - lambda2, lambda2};
}

/// k-th moment of the entropy operator -log2(rho) over the reduced state of a
/// pure two-qubit state with concurrence c. k = 0 gives 1, k = 1 the
/// entanglement entropy in bits.
template <std::floating_point Scalar>
Scalar entropy_moment(Scalar c, int k) {
  if (k < 0) throw OutOfDomain("moment order k must be nonnegative");
  const auto [l1, l2] = schmidt_eigenvalues(c);
  const Scalar sign = (k % 2 == 0) ? Scalar(1) : Scalar(-1);
  const Scalar t1 = l1 == Scalar(0) ? Scalar(0) : l1 * detail::ipow(std::log2(l1), k);
  const Scalar t2 = l2 == Scalar(0) ? Scalar(0) : l2 * detail::ipow(std::log2(l2), k);
  return sign * (t1 + t2) + Scalar(0);
}

/// Entanglement entropy E(c) = H((1 + sqrt(1 - c^2))/2) in bits.
template <std::floating_point Scalar>
Scalar entanglement(Scalar c) {
  return entropy_moment(c, 1);
}

/// RMS entanglement fluctuation, closed form c log2[(1 + sqrt(1 - c^2))/c].
/// Vanishes at both endpoints c = 0 and c = 1.
template <std::floating_point Scalar>
Scalar fluctuation(Scalar c) {
  c = detail::checked_unit_interval(c, "concurrence");
  if (c == Scalar(0)) return Scalar(0);
  const Scalar s = std::sqrt(std::max(Scalar(0), (Scalar(1) - c) * (Scalar(1) + c)));
  return c * std::log2((Scalar(1) + s) / c) + Scalar(0);
}

/// RMS fluctuation computed from the first two entropy moments,
/// sqrt(m2 - m1^2). Agrees with fluctuation() to round-off; kept as an
/// independent route for cross-checking.
template <std::floating_point Scalar>
Scalar fluctuation_via_moments(Scalar c) {
  const Scalar m1 = entropy_moment(c, 1);
  const Scalar m2 = entropy_moment(c, 2);
  return std::sqrt(std::max(Scalar(0), m2 - m1 * m1));
}

/// Relative fluctuation dE/E. Empty at c = 0 where both numerator and
/// denominator vanish; zero at c = 1.
template <std::floating_point Scalar>
std::optional<Scalar> relative_fluctuation(Scalar c) {
  c = detail::checked_unit_interval(c, "concurrence");
  if (c == Scalar(0)) return std::nullopt;
  const Scalar e = entanglement(c);
  if (e == Scalar(0)) return std::nullopt;
  return fluctuation(c) / e;
}

/// Boundary expansions of E(c): -c^2/2 log2[c/(2 sqrt(e))] near zero and
/// 1 - (1 - c)/ln 2 near one.
template <std::floating_point Scalar>
Scalar asymptotic_entanglement(Scalar c, Limit limit) {
  c = detail::checked_open_unit_interval(c, "concurrence");
  if (limit == Limit::near_zero) {
    const Scalar two_sqrt_e = Scalar(2) * std::sqrt(std::numbers::e_v<Scalar>);
    return -Scalar(0.5) * c * c * std::log2(c / two_sqrt_e);
  }
  return Scalar(1) - (Scalar(1) - c) / std::numbers::ln2_v<Scalar>;
}

/// Boundary expansions of the fluctuation: -c log2(c/2) near zero and
/// (sqrt(2)/ln 2) sqrt(1 - c) near one.
template <std::floating_point Scalar>
Scalar asymptotic_fluctuation(Scalar c, Limit limit) {
  c = detail::checked_open_unit_interval(c, "concurrence");
  if (limit == Limit::near_zero) return -c * std::log2(c / Scalar(2));
  return std::numbers::sqrt2_v<Scalar> / std::numbers::ln2_v<Scalar> *
         std::sqrt(Scalar(1) - c);
}

/// Boundary expansions of dE/E: (2/c) [1 - 1/(2 ln(c/2))]^-1 near zero
/// (leading behavior 2/c) and the same square-root law as the fluctuation
/// near one.
template <std::floating_point Scalar>
Scalar asymptotic_relative(Scalar c, Limit limit) {
  c = detail::checked_open_unit_interval(c, "concurrence");
  if (limit == Limit::near_zero) {
    return Scalar(2) / c / (Scalar(1) - Scalar(1) / (Scalar(2) * std::log(c / Scalar(2))));
  }
  return asymptotic_fluctuation(c, Limit::near_one);
}

}  // namespace qef
