#include "mathieu/specfun/bessel.hpp"

#include <cmath>
#include <numbers>

#include "mathieu/errors.hpp"
#include "real_ops.hpp"
#include "series_engine.hpp"

namespace mathieu::specfun {

namespace {

using detail::quad;

double ascending_series(double order, double x) {
  const quad h = quad(x) / 2;
  int sign = 1;
  const quad log_t0 = quad(order) * logq(h) -
                      detail::lgamma_signed(quad(order + 1.0), &sign);
  const quad t0 = sign * expq(log_t0);
  const quad h2 = h * h;
  auto next = [&](std::int64_t k, quad t) {
    const quad kk = quad(static_cast<double>(k));
    return detail::Step<quad>{-t * h2 / ((kk + 1) * (quad(order) + kk + 1)),
                              false};
  };
  detail::SeriesControl c;
  c.rel_target = 1e-30;
  c.min_terms = static_cast<std::int64_t>(x) + 2;
  return static_cast<double>(detail::sum_series(t0, next, c).sum);
}

// Hankel expansion with a_k(ν) = ∏_{j≤k} (4ν² − (2j−1)²) / (k! 8^k).
double hankel(double order, double x) {
  const double m = 4.0 * order * order;
  double p = 0.0;
  double q = 0.0;
  double a = 1.0;  // a_k / x^k
  double last = INFINITY;
  for (int k = 0; k < 200; ++k) {
    const double mag = std::fabs(a);
    if (mag > last) break;
    last = mag;
    switch (k % 4) {
      case 0: p += a; break;
      case 1: q += a; break;
      case 2: p -= a; break;
      default: q -= a; break;
    }
    if (mag < 1e-18 * (std::fabs(p) + std::fabs(q))) break;
    const double j = 2.0 * k + 1.0;
    a *= (m - j * j) / ((k + 1.0) * 8.0 * x);
    if (a == 0.0) break;
  }
  const double phase = (order / 2.0 + 0.25) * std::numbers::pi;
  const double c = std::cos(x) * std::cos(phase) + std::sin(x) * std::sin(phase);
  const double s = std::sin(x) * std::cos(phase) - std::cos(x) * std::sin(phase);
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * c - q * s);
}

}  // namespace

double bessel_j(double order, double x) {
  if (!(order >= -0.5)) throw DomainError("bessel_j: order must be >= -1/2");
  if (!(x >= 0.0)) throw DomainError("bessel_j: x must be nonnegative");
  if (x == 0.0) return order == 0.0 ? 1.0 : 0.0;
  if (x <= std::max(25.0, 2.0 * order * order)) return ascending_series(order, x);
  return hankel(order, x);
}

}  // namespace mathieu::specfun
