#pragma once
// Independent reference computations used by the tests. They share no code
// with the library: plain long double loops with generous truncation.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>

namespace oracle {

using Real = long double;

struct Kahan {
  Real sum = 0, c = 0;
  void add(Real x) {
    const Real y = x - c;
    const Real t = sum + y;
    c = (t - sum) - y;
    sum = t;
  }
};

// ∫_N^∞ f via x = N/u and composite Simpson on (0, 1].
inline Real tail_integral(const std::function<Real(Real)>& f, Real n, int panels = 4000) {
  // g(0) is the limit, zero unless f ~ x^{-2}
  auto g = [&](Real u) {
    if (u == 0) u = 1e-9L;
    return f(n / u) * n / (u * u);
  };
  const Real h = Real(1) / panels;
  Real s = g(0) + g(1);
  for (int i = 1; i < panels; ++i) s += g(i * h) * (i % 2 ? 4 : 2);
  return s * h / 3;
}

// Σ_{n≥1} f(n) for positive, eventually smooth and decreasing f ~ n^{-p},
// p > 1: partial sum to N−1 plus ∫_N^∞ f + f(N)/2 − f'(N)/12.
inline Real positive_sum(const std::function<Real(Real)>& f, std::int64_t n = 200000) {
  Kahan k;
  for (std::int64_t i = 1; i < n; ++i) k.add(f(static_cast<Real>(i)));
  const Real N = static_cast<Real>(n);
  const Real h = N * 1e-4L;
  const Real fp = (f(N + h) - f(N - h)) / (2 * h);
  return k.sum + tail_integral(f, N) + f(N) / 2 - fp / 12;
}

// Σ_{n≥1} (−1)ⁿ f(n) for f eventually decreasing: average of two
// consecutive partial sums.
inline Real alternating_sum(const std::function<Real(Real)>& f, std::int64_t n = 400000) {
  Kahan k;
  Real prev = 0;
  for (std::int64_t i = 1; i <= n + 1; ++i) {
    prev = k.sum;
    k.add((i % 2 ? -1 : 1) * f(static_cast<Real>(i)));
  }
  return (prev + k.sum) / 2;
}

// Σ_{n≥1} f(n) until the terms stop mattering (geometric decay).
inline Real geometric_sum(const std::function<Real(Real)>& f, std::int64_t max_terms = 100000) {
  Kahan k;
  for (std::int64_t i = 1; i <= max_terms; ++i) {
    const Real t = f(static_cast<Real>(i));
    k.add(t);
    if (std::fabs(t) < 1e-24L * std::fabs(k.sum) && i > 10) break;
  }
  return k.sum;
}

// Term 2 a^β (ν)_n zⁿ / ((a^α + r²)^μ n!) with a_n = n, via log-gamma.
inline Real mathieu_term(Real n, Real alpha, Real beta, Real mu, Real nu, Real r, Real z) {
  const Real w = std::exp(std::lgamma(nu + n) - std::lgamma(nu) - std::lgamma(n + 1));
  return 2 * std::pow(n, beta) * w * std::pow(z, n) / std::pow(std::pow(n, alpha) + r * r, mu);
}

// Generic summation choice for a_n = n.
inline Real mathieu_series(Real alpha, Real beta, Real mu, Real nu, Real r, Real z) {
  auto f = [=](Real n) { return mathieu_term(n, alpha, beta, mu, nu, r, std::fabs(z)); };
  if (std::fabs(z) < 1) {
    if (z >= 0) return geometric_sum(f);
    return geometric_sum([=](Real n) { return (static_cast<std::int64_t>(n) % 2 ? -1 : 1) * f(n); });
  }
  if (z > 0) return positive_sum(f);
  return alternating_sum(f);
}

// Σ e^{itn} w(n) for positive decreasing convex w ~ n^{-p}, p ≥ 3.
inline std::complex<Real> oscillating_sum(const std::function<Real(Real)>& w, Real t,
                                          std::int64_t n = 2000000) {
  Kahan re, im;
  for (std::int64_t i = 1; i <= n; ++i) {
    const Real x = static_cast<Real>(i);
    const Real v = w(x);
    re.add(v * std::cos(t * x));
    im.add(v * std::sin(t * x));
  }
  return {re.sum, im.sum};
}

}  // namespace oracle
