#pragma once

#include <cmath>
#include <concepts>
#include <functional>
#include <limits>

#include "qef/measures.hpp"
#include "qef/thermal.hpp"

namespace qef {

inline constexpr int kRootIterationCap = 200;

template <std::floating_point Scalar>
struct RootResult {
  Scalar value;
  Scalar residual;
  int iterations;
  Scalar lo;
  Scalar hi;
};

/// Brent-style bracketed root finding: bisection with secant / inverse
/// quadratic acceleration. Succeeds once |f(x)| <= ftol or the bracket has
/// shrunk to xtol; throws NoSignChange if f(lo) and f(hi) have the same sign
/// and MaxIterations past the iteration cap. Deterministic for fixed inputs.
template <std::floating_point Scalar, typename F>
  requires std::invocable<F, Scalar>
RootResult<Scalar> find_root(F&& f, Scalar lo, Scalar hi,
                             Scalar xtol = Scalar(1e-12),
                             Scalar ftol = Scalar(1e-12)) {
  if (!(lo < hi)) throw BadSpec("root bracket requires lo < hi");
  Scalar a = lo, b = hi;
  Scalar fa = f(a), fb = f(b);
  if (fa == Scalar(0)) return {a, fa, 0, lo, hi};
  if (fb == Scalar(0)) return {b, fb, 0, lo, hi};
  if ((fa > Scalar(0)) == (fb > Scalar(0))) {
    throw NoSignChange(static_cast<double>(fa), static_cast<double>(fb));
  }

  Scalar c = a, fc = fa;      // c is the previous iterate with f(c) opposite f(b)
  Scalar step = b - a, step_prev = step;
  constexpr Scalar eps = std::numeric_limits<Scalar>::epsilon();

  for (int iter = 1; iter <= kRootIterationCap; ++iter) {
    if ((fb > Scalar(0)) == (fc > Scalar(0))) {
      c = a; fc = fa;
      step = step_prev = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const Scalar guard = Scalar(2) * eps * std::abs(b);
    const Scalar half = (c - b) / Scalar(2);
    if (std::abs(fb) <= ftol || Scalar(2) * std::abs(half) <= xtol) {
      return {b, fb, iter, lo, hi};
    }
    if (std::abs(step_prev) >= guard && std::abs(fa) > std::abs(fb)) {
      // Interpolate: secant, or inverse quadratic when three points differ.
      Scalar p, q;
      const Scalar s = fb / fa;
      if (a == c) {
        p = Scalar(2) * half * s;
        q = Scalar(1) - s;
      } else {
        const Scalar r1 = fa / fc, r2 = fb / fc;
        p = s * (Scalar(2) * half * r1 * (r1 - r2) - (b - a) * (r2 - Scalar(1)));
        q = (r1 - Scalar(1)) * (r2 - Scalar(1)) * (s - Scalar(1));
      }
      if (p > Scalar(0)) q = -q; else p = -p;
      if (Scalar(2) * p < std::min(Scalar(3) * half * q - std::abs(guard * q),
                                   std::abs(step_prev * q))) {
        step_prev = step;
        step = p / q;
      } else {
        step = half;
        step_prev = step;
      }
    } else {
      step = half;
      step_prev = step;
    }
    a = b; fa = fb;
    if (std::abs(step) > guard) {
      b += step;
    } else {
      b += half > Scalar(0) ? guard : -guard;
    }
    fb = f(b);
  }
  throw MaxIterations(kRootIterationCap);
}

/// Concurrence c_f at which fluctuation equals entanglement: the root of
/// (c + s) ln[(1 + s)/c] = ln(2/c) with s = sqrt(1 - c^2). Starts from the
/// bracket [0.5, 0.99] where the sign change is known to live and falls back
/// to [0.01, 0.999] otherwise. The returned root is cross-checked against the
/// defining property |fluctuation - entanglement| <= 1e-10.
template <std::floating_point Scalar = double>
RootResult<Scalar> solve_c_f(Scalar xtol = Scalar(1e-12)) {
  const auto crossing = [](Scalar c) {
    const Scalar s = std::sqrt((Scalar(1) - c) * (Scalar(1) + c));
    return (c + s) * std::log((Scalar(1) + s) / c) - std::log(Scalar(2) / c);
  };
  Scalar lo = Scalar(0.5), hi = Scalar(0.99);
  if ((crossing(lo) > Scalar(0)) == (crossing(hi) > Scalar(0))) {
    lo = Scalar(0.01);
    hi = Scalar(0.999);
  }
  const RootResult<Scalar> root = find_root(crossing, lo, hi, xtol, Scalar(1e-12));
  const Scalar mismatch = std::abs(fluctuation(root.value) - entanglement(root.value));
  if (mismatch > Scalar(1e-10)) {
    throw NoConvergence("c_f root fails the fluctuation = entanglement check, "
                        "|dE - E| = " + detail::num_str(static_cast<double>(mismatch)));
  }
  return root;
}

template <std::floating_point Scalar>
struct TauFResult {
  Scalar tau_f;            // in units of |j|, i.e. k_B T_f / |j|
  Scalar tau_f_over_tau_e;
  RootResult<Scalar> c_f;
};

/// Temperature of the fluctuation = entanglement crossing in the dimer, via
/// the c_f root: tau_f = 2 / ln[3 (1 + c_f)/(1 - c_f)] in units of |j|.
template <std::floating_point Scalar = double>
TauFResult<Scalar> solve_tau_f() {
  const RootResult<Scalar> c_f = solve_c_f<Scalar>();
  const Scalar tau_f = fluctuation_equal_temperature(Scalar(-1), c_f.value);
  return {tau_f, tau_f / entanglement_temperature(Scalar(-1)), c_f};
}

}  // namespace qef
