#pragma once

// Elementary operations shared by the double and 113-bit code paths.

#include <cmath>

#include <quadmath.h>

namespace mathieu::specfun::detail {

using quad = __float128;

inline double exp_r(double x) { return std::exp(x); }
inline quad exp_r(quad x) { return expq(x); }
inline double log_r(double x) { return std::log(x); }
inline quad log_r(quad x) { return logq(x); }
inline double abs_r(double x) { return std::fabs(x); }
inline quad abs_r(quad x) { return fabsq(x); }

inline bool finite_r(double x) { return std::isfinite(x); }
inline bool finite_r(quad x) { return finiteq(x) != 0; }

// log|Γ(x)| and the sign of Γ(x); x must not be a pole.
inline double lgamma_signed(double x, int* sign) { return ::lgamma_r(x, sign); }
inline quad lgamma_signed(quad x, int* sign) {
  *sign = (x > 0 || static_cast<long long>(floorq(x)) % 2 == 0) ? 1 : -1;
  return lgammaq(x);
}

template <typename Real>
constexpr double unit_roundoff();
template <>
constexpr double unit_roundoff<double>() {
  return 1.1102230246251565e-16;
}
template <>
constexpr double unit_roundoff<quad>() {
  return 9.629649721936179e-35;
}

inline bool is_nonpositive_integer(double x) {
  return x <= 0.0 && x == std::floor(x);
}

}  // namespace mathieu::specfun::detail
