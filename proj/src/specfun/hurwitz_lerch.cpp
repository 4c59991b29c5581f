#include "mathieu/specfun/hurwitz_lerch.hpp"

#include <cmath>

#include "mathieu/compensated.hpp"
#include "mathieu/errors.hpp"

namespace mathieu::specfun {

namespace {

constexpr std::int64_t kTermBudget = 10'000'000;
constexpr double kEps = 1.1102230246251565e-16;

}  // namespace

ComplexEvalResult hurwitz_lerch_phi_star(std::complex<double> z, double s,
                                         std::complex<double> a, double nu,
                                         double tol) {
  const double az = std::abs(z);
  if (!(nu > 0.0)) throw DomainError("hurwitz_lerch_phi_star: requires nu > 0");
  if (!(az <= 1.0)) {
    throw DomainError("hurwitz_lerch_phi_star: requires |z| <= 1");
  }
  if (az == 1.0 && !(s - nu > 1.0)) {
    throw DivergenceError("hurwitz_lerch_phi_star diverges on |z| = 1",
                          "s - nu > 1");
  }
  if (!(tol > 0.0)) throw DomainError("hurwitz_lerch_phi_star: tol must be > 0");
  const double re_a = a.real();
  const double im_a = std::fabs(a.imag());
  if (a.imag() == 0.0 && re_a <= 0.0 && re_a == std::floor(re_a)) {
    throw DomainError("hurwitz_lerch_phi_star: n + a vanishes for some n");
  }

  ComplexCompensatedSum acc;
  double weighted = 0.0;
  double w = 1.0;  // (ν)_n / n!
  std::complex<double> zn = 1.0;
  double tail = INFINITY;
  std::int64_t n = 0;
  for (; n < kTermBudget; ++n) {
    const double dn = static_cast<double>(n);
    const std::complex<double> base = dn + a;
    const std::complex<double> t = w * zn * std::exp(-s * std::log(base));
    acc.add(t);
    const double at = std::abs(t);
    weighted += at * (dn + 1.0);

    const double shifted = dn + re_a;  // Re(n + a)
    if (shifted > im_a + 1.0) {
      if (az < 1.0) {
        // sup over k > n of |t_{k+1} / t_k|
        double rho = az * std::max(1.0, (nu + dn + 1.0) / (dn + 2.0));
        if (s < 0.0) rho *= std::pow((shifted + 2.0) / (shifted + 1.0), -s);
        if (rho < 1.0) {
          const double next = az * std::abs(zn) * std::abs(w * (nu + dn) / (dn + 1.0)) *
                              std::exp(-s * std::log(std::abs(base + 1.0)));
          const double bound = next / (1.0 - rho);
          if (bound <= tol) {
            tail = bound;
            ++n;
            break;
          }
        }
      } else if (n % 64 == 0 && n > 0) {
        // |t_k| <= |t_n| (k/n)^{ν'} ((n + Re a + |Im a|)/n)^s (n/k)^s, k > n
        const double nu_p = std::max(nu - 1.0, 0.0);
        double kappa = 1.0;
        if (re_a < 0.0) kappa = std::pow(1.0 + re_a / dn, -s);
        const double bound = at * std::pow((dn + re_a + im_a) / dn, s) *
                             kappa * dn / (s - nu_p - 1.0);
        if (bound <= tol) {
          tail = bound;
          ++n;
          break;
        }
      }
    }
    w *= (nu + dn) / (dn + 1.0);
    zn *= z;
  }
  if (n >= kTermBudget) {
    throw ConvergenceError(
        "hurwitz_lerch_phi_star: tolerance not reached within term budget",
        tail);
  }
  ComplexEvalResult r;
  r.value = acc.value();
  r.abs_error_bound =
      tail + 16.0 * kEps * weighted * (1.0 + std::fabs(s)) +
      2.0 * kEps * std::abs(r.value);
  r.terms_used = n;
  r.method = "hurwitz-lerch-series";
  return r;
}

}  // namespace mathieu::specfun
