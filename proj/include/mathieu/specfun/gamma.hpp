#pragma once

namespace mathieu::specfun {

/// log|Γ(x)|; the sign of Γ(x) is written to `sign` when non-null.
/// Reentrant (does not touch the global `signgam`).
double log_abs_gamma(double x, int* sign = nullptr);

double gamma(double x);

/// lnΓ(x + a) − lnΓ(x + b) for x + a > 0 and x + b > 0, computed without the
/// catastrophic cancellation of the naive difference when x is large.
double log_gamma_ratio(double x, double a, double b);

/// Γ(y + h) / Γ(y) for y > 0, h > 0. Small integer steps use the exact
/// rising product.
double gamma_step(double y, double h);

struct LogPochhammer {
  double log_abs = 0.0;
  int sign = 1;  // 0 when the product contains a zero factor
};

/// (ν)_n in log-magnitude/sign form; never overflows.
LogPochhammer log_pochhammer(double nu, long n);

/// Rising factorial (ν)_n = ν(ν+1)···(ν+n−1), (ν)_0 = 1.
/// Throws OutOfRangeError when the value does not fit in a double.
double pochhammer(double nu, long n);

}  // namespace mathieu::specfun
