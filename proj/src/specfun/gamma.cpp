#include "mathieu/specfun/gamma.hpp"

#include <cfloat>
#include <cmath>
#include <string>

#include "mathieu/errors.hpp"

namespace mathieu::specfun {

namespace {

// Stirling correction lnΓ(y) − [(y − ½)ln y − y + ½ln 2π], valid for y ≥ 20.
double stirling_tail(double y) {
  const double y2 = y * y;
  return (1.0 / 12.0 -
          (1.0 / 360.0 -
           (1.0 / 1260.0 - (1.0 / 1680.0 - 1.0 / (1188.0 * y2)) / y2) / y2) /
              y2) /
         y;
}

constexpr double kStirlingThreshold = 20.0;

}  // namespace

double log_abs_gamma(double x, int* sign) {
  int s = 1;
  const double v = ::lgamma_r(x, &s);
  if (sign != nullptr) *sign = s;
  return v;
}

double gamma(double x) { return std::tgamma(x); }

double log_gamma_ratio(double x, double a, double b) {
  const double u = x + b;
  const double v = x + a;
  if (!(u > 0.0) || !(v > 0.0)) {
    throw DomainError("log_gamma_ratio: arguments must be positive");
  }
  if (a == b) return 0.0;
  if (std::min(u, v) < kStirlingThreshold) {
    return log_abs_gamma(v) - log_abs_gamma(u);
  }
  const double d = a - b;
  return (u + d - 0.5) * std::log1p(d / u) + d * std::log(u) - d +
         (stirling_tail(v) - stirling_tail(u));
}

double gamma_step(double y, double h) {
  if (h >= 0.0 && h <= 32.0 && h == std::floor(h)) {
    double p = 1.0;
    for (int j = 0; j < static_cast<int>(h); ++j) p *= y + j;
    return p;
  }
  return std::exp(log_gamma_ratio(y, h, 0.0));
}

LogPochhammer log_pochhammer(double nu, long n) {
  if (n < 0) throw DomainError("pochhammer: n must be nonnegative");
  if (n == 0) return {0.0, 1};
  if (nu > 0.0) return {log_gamma_ratio(nu, static_cast<double>(n), 0.0), 1};
  if (nu == std::floor(nu)) {
    const double m = -nu;  // factors are −m, −m+1, ..., −m+n−1
    if (static_cast<double>(n) > m) return {0.0, 0};
    const double log_abs =
        log_abs_gamma(m + 1.0) - log_abs_gamma(m - static_cast<double>(n) + 1.0);
    return {log_abs, (n % 2 == 0) ? 1 : -1};
  }
  int s_top = 1;
  int s_bottom = 1;
  const double top = log_abs_gamma(nu + static_cast<double>(n), &s_top);
  const double bottom = log_abs_gamma(nu, &s_bottom);
  return {top - bottom, s_top * s_bottom};
}

double pochhammer(double nu, long n) {
  if (n < 0) throw DomainError("pochhammer: n must be nonnegative");
  if (n <= 64) {
    double p = 1.0;
    for (long k = 0; k < n; ++k) p *= nu + static_cast<double>(k);
    if (!std::isfinite(p)) {
      throw OutOfRangeError("pochhammer: (" + std::to_string(nu) + ")_" +
                            std::to_string(n) + " overflows double");
    }
    return p;
  }
  const LogPochhammer lp = log_pochhammer(nu, n);
  if (lp.sign == 0) return 0.0;
  if (lp.log_abs > std::log(DBL_MAX)) {
    throw OutOfRangeError("pochhammer: (" + std::to_string(nu) + ")_" +
                          std::to_string(n) + " overflows double");
  }
  return lp.sign * std::exp(lp.log_abs);
}

}  // namespace mathieu::specfun
