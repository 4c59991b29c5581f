#pragma once

// Remainder-certified summation helpers shared by the series evaluators and
// the integral representations that contain an inner sum.

#include <cstdint>
#include <functional>

#include "mathieu/series/params.hpp"

namespace mathieu::series::detail {

struct SumResult {
  double value = 0.0;
  double bound = 0.0;
  std::int64_t terms = 0;
};

/// Σ_{n≥1} f(n) for f smooth on [1, ∞), eventually decreasing and convex,
/// f(x) ~ x^{−p} with p > 1. Partial sum to N−1 plus the Euler–Maclaurin
/// remainder ∫_N^∞ f + f(N)/2 − f'(N)/12. The error is at most |f'''(N)|/720
/// when the sampled f''' is negative and shrinking, else |f'(N)|/12 under
/// convexity. `term_rel_error` is the relative accuracy of one f value.
SumResult euler_maclaurin_sum(const std::function<double(double)>& f, double p,
                              double tol, double term_rel_error,
                              std::int64_t n_min = 16);

/// Σ_{n≥1} (−1)ⁿ f(n) for f eventually decreasing and convex; the remainder
/// after N−1 terms is (−1)^N [f(N)/2 + Δf(N)/4] with error at most Δf(N)/4.
SumResult alternating_sum(const std::function<double(double)>& f, double tol,
                          double term_rel_error, std::int64_t n_min = 16);

/// log of the n-th Mathieu term magnitude 2 a_n^β (ν)_n |z|ⁿ / ((a_n^α+r²)^μ n!)
/// and a bound on its relative evaluation error.
class TermModel {
 public:
  TermModel(const SeriesParams& params, const SequenceSpec& seq);

  struct Term {
    double value = 0.0;  // signed
    double log_abs = 0.0;
    double rel_error = 0.0;
  };
  Term evaluate(std::int64_t n) const;
  /// Continuous extension in n (PowerOfIndex only) of the unsigned term
  /// without the |z|ⁿ factor.
  double smooth(double x) const;
  /// Relative accuracy of smooth(x) for x ≤ x_max.
  double smooth_rel_error(double x_max) const;
  /// log((ν)_x / Γ(x + 1)).
  double log_weight(double x) const;

  const SeriesParams& params() const { return params_; }
  const SequenceSpec& sequence() const { return seq_; }

 private:
  double log_core(double x, double log_a, double* magnitude) const;

  SeriesParams params_;
  SequenceSpec seq_;
  double log_gamma_nu_ = 0.0;
  double r2_ = 0.0;
};

}  // namespace mathieu::series::detail
