#pragma once

#include <cmath>
#include <concepts>
#include <numbers>
#include <optional>
#include <span>
#include <vector>

#include "qef/measures.hpp"
#include "qef/mixed_state.hpp"

namespace qef {

/// Heisenberg dimer parameters: signed exchange coupling j (energy units,
/// k_B = 1) and temperature tau = k_B T in the same units. The Boltzmann
/// exponent is K = j / (2 tau).
template <std::floating_point Scalar>
struct DimerParams {
  Scalar j;
  Scalar tau;
};

namespace detail {

template <std::floating_point Scalar>
void check_dimer(const DimerParams<Scalar>& p) {
  if (!std::isfinite(p.j)) throw OutOfDomain("coupling j must be finite");
  if (p.j == Scalar(0)) throw ZeroCoupling();
  if (!(p.tau > Scalar(0)) || !std::isfinite(p.tau)) {
    throw OutOfDomain("temperature tau = " + num_str(static_cast<double>(p.tau)) +
                      " must be positive and finite");
  }
}

}  // namespace detail

/// Temperature above which the thermal concurrence vanishes,
/// tau_e = (2/ln 3) |j|.
template <std::floating_point Scalar>
Scalar entanglement_temperature(Scalar j) {
  if (!std::isfinite(j)) throw OutOfDomain("coupling j must be finite");
  if (j == Scalar(0)) throw ZeroCoupling();
  return Scalar(2) / std::log(Scalar(3)) * std::abs(j);
}

/// Bell weights of the thermal state: e^{-3K}/Z on the singlet and e^{K}/Z on
/// each triplet state, Z = 3 e^K + e^{-3K}. Evaluated through the ratio
/// e^{4K} (or its inverse) so no intermediate can overflow at any tau > 0.
template <std::floating_point Scalar>
BellWeights<Scalar> thermal_weights(const DimerParams<Scalar>& p) {
  detail::check_dimer(p);
  const Scalar k = p.j / (Scalar(2) * p.tau);
  Scalar p_singlet;  // weight of |Psi->
  Scalar p_triplet;  // weight of each of |Psi+>, |Phi+>, |Phi->
  if (k <= Scalar(0)) {
    const Scalar q = std::exp(Scalar(4) * k);
    p_singlet = Scalar(1) / (Scalar(1) + Scalar(3) * q);
    p_triplet = q / (Scalar(1) + Scalar(3) * q);
  } else {
    const Scalar r = std::exp(Scalar(-4) * k);
    p_singlet = r / (r + Scalar(3));
    p_triplet = Scalar(1) / (r + Scalar(3));
  }
  return make_bell_weights(p_triplet, p_singlet, p_triplet, p_triplet);
}

/// Thermal (Gibbs) state of the dimer at the given parameters.
template <std::floating_point Scalar>
DensityMatrix<Scalar> thermal_state(const DimerParams<Scalar>& p) {
  return bell_mixture(thermal_weights(p));
}

/// Closed-form thermal concurrence: -1 + 2/[1 + 3 e^{-2|j|/tau}] in the
/// antiferromagnetic case (j < 0) below tau_e, zero at and above tau_e, and
/// identically zero for ferromagnetic coupling (j > 0).
template <std::floating_point Scalar>
Scalar thermal_concurrence(const DimerParams<Scalar>& p) {
  detail::check_dimer(p);
  if (p.j > Scalar(0)) return Scalar(0);
  if (p.tau >= entanglement_temperature(p.j)) return Scalar(0);
  const Scalar x = std::exp(Scalar(-2) * std::abs(p.j) / p.tau);
  return std::max(Scalar(0), Scalar(-1) + Scalar(2) / (Scalar(1) + Scalar(3) * x));
}

/// Temperature at which fluctuation equals entanglement,
/// tau_f = 2 |j| / ln[3 (1 + c_f)/(1 - c_f)], given the crossing
/// concurrence c_f.
template <std::floating_point Scalar>
Scalar fluctuation_equal_temperature(Scalar j, Scalar c_f) {
  if (!std::isfinite(j)) throw OutOfDomain("coupling j must be finite");
  if (j == Scalar(0)) throw ZeroCoupling();
  c_f = detail::checked_open_unit_interval(c_f, "crossing concurrence");
  return std::abs(j) * Scalar(2) /
         std::log(Scalar(3) * (Scalar(1) + c_f) / (Scalar(1) - c_f));
}

/// One row of a thermal sweep. `rel` is empty wherever the entanglement
/// vanishes (tau >= tau_e, or any tau for ferromagnetic coupling).
template <std::floating_point Scalar>
struct ThermalPoint {
  Scalar tau;
  Scalar tau_over_te;
  Scalar c;
  Scalar e;
  Scalar delta_e;
  std::optional<Scalar> rel;
};

template <std::floating_point Scalar>
std::vector<ThermalPoint<Scalar>> thermal_sweep(Scalar j, std::span<const Scalar> tau_grid) {
  const Scalar te = entanglement_temperature(j);
  std::vector<ThermalPoint<Scalar>> out;
  out.reserve(tau_grid.size());
  for (Scalar tau : tau_grid) {
    const Scalar c = thermal_concurrence(DimerParams<Scalar>{j, tau});
    out.push_back({tau, tau / te, c, entanglement(c), fluctuation(c),
                   relative_fluctuation(c)});
  }
  return out;
}

}  // namespace qef
