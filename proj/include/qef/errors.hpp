#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace qef {

namespace detail {

inline std::string num_str(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace detail

/// Base class for all errors thrown by this library. The message always
/// names the violated invariant and, where applicable, its measured
/// magnitude, so callers can report failures without extra bookkeeping.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NotHermitian : public Error {
 public:
  NotHermitian(double defect, double tol)
      : Error("NotHermitian: max |M - M^dagger| = " + detail::num_str(defect) +
              " exceeds tolerance " + detail::num_str(tol)) {}
};

class NotPositiveSemiDefinite : public Error {
 public:
  NotPositiveSemiDefinite(double min_eigenvalue, double floor)
      : Error("NotPositiveSemiDefinite: min eigenvalue = " +
              detail::num_str(min_eigenvalue) + " is below " +
              detail::num_str(floor)) {}
};

class BadTrace : public Error {
 public:
  BadTrace(double deviation, double tol)
      : Error("BadTrace: |tr - 1| = " + detail::num_str(deviation) +
              " exceeds tolerance " + detail::num_str(tol)) {}
};

class NoConvergence : public Error {
 public:
  explicit NoConvergence(const std::string& what)
      : Error("NoConvergence: " + what) {}
};

class ZeroVector : public Error {
 public:
  ZeroVector() : Error("ZeroVector: amplitudes must not all be zero") {}
};

class NotNormalized : public Error {
 public:
  NotNormalized(double deviation, double tol)
      : Error("NotNormalized: |norm^2 - 1| = " + detail::num_str(deviation) +
              " exceeds tolerance " + detail::num_str(tol)) {}
};

class OutOfDomain : public Error {
 public:
  explicit OutOfDomain(const std::string& what) : Error("OutOfDomain: " + what) {}
};

class NoSignChange : public Error {
 public:
  NoSignChange(double f_lo, double f_hi)
      : Error("NoSignChange: f(lo) = " + detail::num_str(f_lo) +
              " and f(hi) = " + detail::num_str(f_hi) +
              " do not bracket a root") {}
};

class MaxIterations : public Error {
 public:
  explicit MaxIterations(int cap)
      : Error("MaxIterations: no convergence within " + std::to_string(cap) +
              " iterations") {}
};

class ZeroCoupling : public Error {
 public:
  ZeroCoupling() : Error("ZeroCoupling: exchange coupling j must be nonzero") {}
};

class BadSpec : public Error {
 public:
  explicit BadSpec(const std::string& what) : Error("BadSpec: " + what) {}
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error("ParseError: " + what) {}
};

class UnwritablePath : public Error {
 public:
  explicit UnwritablePath(const std::string& path)
      : Error("UnwritablePath: cannot open '" + path + "' for writing") {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error("IoError: " + what) {}
};

}  // namespace qef
