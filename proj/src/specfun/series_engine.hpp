#pragma once

// Summation loop shared by the hypergeometric-type series. Terms are produced
// one at a time by a `next(n, t_n)` callable returning t_{n+1}; the loop stops
// once the ratio |t_{n+1}/t_n| has settled below one and is non-increasing,
// and the geometric tail it implies is negligible.

#include <cstdint>
#include <limits>

#include "mathieu/compensated.hpp"
#include "mathieu/errors.hpp"
#include "real_ops.hpp"

namespace mathieu::specfun::detail {

template <typename Real>
struct Step {
  Real term{0};
  bool terminal = false;  // every later term is exactly zero
};

struct SeriesControl {
  double rel_target = 1e-17;
  double abs_floor = 1e-300;
  std::int64_t min_terms = 0;
  std::int64_t max_terms = 2'000'000;
  double term_error_factor = 8.0;  // relative error of t_n ~ factor·(n+1)·u
};

template <typename Real>
struct SeriesOutcome {
  Real sum{0};
  double abs_error = 0.0;
  std::int64_t terms = 0;
  double max_abs = 0.0;

  double cancellation() const {
    const double s = static_cast<double>(abs_r(sum));
    if (max_abs == 0.0) return 1.0;
    return s == 0.0 ? std::numeric_limits<double>::infinity() : max_abs / s;
  }
};

template <typename Real, typename Next>
SeriesOutcome<Real> sum_series(Real t0, Next&& next, const SeriesControl& c) {
  const double u = unit_roundoff<Real>();
  CompensatedSum<Real> acc;
  Real weighted{0};  // Σ |t_n| (n + 1)
  Real t = t0;
  double last_q = std::numeric_limits<double>::infinity();
  int settled = 0;
  double tail = 0.0;
  std::int64_t n = 0;
  for (;; ++n) {
    if (!finite_r(t)) throw OutOfRangeError("series term overflowed");
    acc.add(t);
    weighted += abs_r(t) * Real(n + 1);
    if (n + 1 >= c.max_terms) {
      throw ConvergenceError("series did not converge within the term budget",
                             static_cast<double>(abs_r(t)));
    }
    const Step<Real> s = next(n, t);
    if (s.terminal) {
      tail = 0.0;
      ++n;
      break;
    }
    const double at = static_cast<double>(abs_r(t));
    const double an = static_cast<double>(abs_r(s.term));
    if (at > 0.0 && an > 0.0) {
      const double q = an / at;
      settled = (q < 1.0 && q <= last_q) ? settled + 1 : 0;
      last_q = q;
      if (settled >= 3 && n >= c.min_terms) {
        const double bound = an / (1.0 - q);
        const double thresh =
            c.rel_target * static_cast<double>(abs_r(acc.value())) +
            c.abs_floor;
        if (bound <= thresh) {
          tail = bound;
          ++n;
          break;
        }
      }
    }
    t = s.term;
  }
  SeriesOutcome<Real> out;
  out.sum = acc.value();
  out.terms = n;
  out.max_abs = static_cast<double>(acc.max_abs());
  out.abs_error = tail +
                  c.term_error_factor * u * static_cast<double>(weighted) +
                  2.0 * u * static_cast<double>(abs_r(out.sum));
  return out;
}

}  // namespace mathieu::specfun::detail
