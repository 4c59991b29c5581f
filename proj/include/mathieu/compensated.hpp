#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace mathieu {

namespace detail {
inline double magnitude(double x) { return std::fabs(x); }
#ifdef __SIZEOF_FLOAT128__
inline __float128 magnitude(__float128 x) { return x < 0 ? -x : x; }
#endif
}  // namespace detail

/// Neumaier (improved Kahan) summation. Besides the compensated sum it keeps
/// the sum of magnitudes and the largest magnitude seen, which the series
/// code needs for rounding bounds and cancellation ratios.
template <typename Real>
class CompensatedSum {
 public:
  void add(Real x) {
    const Real t = sum_ + x;
    if (detail::magnitude(sum_) >= detail::magnitude(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
    const Real ax = detail::magnitude(x);
    abs_sum_ += ax;
    if (ax > max_abs_) max_abs_ = ax;
    ++count_;
  }

  CompensatedSum& operator+=(Real x) {
    add(x);
    return *this;
  }

  Real value() const { return sum_ + compensation_; }
  Real abs_sum() const { return abs_sum_; }
  Real max_abs() const { return max_abs_; }
  long long count() const { return count_; }

 private:
  Real sum_{0};
  Real compensation_{0};
  Real abs_sum_{0};
  Real max_abs_{0};
  long long count_ = 0;
};

/// Compensated sum of complex values, real and imaginary parts kept apart.
class ComplexCompensatedSum {
 public:
  void add(std::complex<double> x) {
    re_.add(x.real());
    im_.add(x.imag());
  }
  std::complex<double> value() const { return {re_.value(), im_.value()}; }
  double abs_sum() const { return re_.abs_sum() + im_.abs_sum(); }

 private:
  CompensatedSum<double> re_;
  CompensatedSum<double> im_;
};

}  // namespace mathieu
