#include "mathieu/series/routes.hpp"

#include <cmath>
#include <complex>
#include <sstream>

#include "mathieu/errors.hpp"
#include "mathieu/series/series.hpp"
#include "mathieu/specfun/gamma.hpp"
#include "mathieu/specfun/hurwitz_lerch.hpp"
#include "mathieu/specfun/mittag_leffler.hpp"

namespace mathieu::series {

namespace {

constexpr double kU = 1.1102230246251565e-16;

// log of min_{n≥1} Γ(γn + δ).
double log_min_gamma_sequence(const GammaArithmetic& seq) {
  double best = INFINITY;
  for (int n = 1;; ++n) {
    const double x = seq.gamma * n + seq.delta;
    best = std::min(best, specfun::log_abs_gamma(x));
    if (x > 2.0) break;  // Γ is increasing beyond its minimum near 1.4616
  }
  return best;
}

// Σ_{n≥1} (ν)_n zⁿ / (n! Γ(γn+δ)^B) and its error bound.
struct Bracket {
  double value = 0.0;
  double bound = 0.0;
  std::int64_t terms = 0;
};

Bracket bracket(const SeriesParams& p, const GammaArithmetic& seq, double b,
                double z, bool shifted) {
  Bracket out;
  if (shifted) {
    const auto e = specfun::mittag_leffler({b, seq.gamma, seq.gamma + seq.delta, 1.0}, z);
    out.value = z * e.value;
    out.bound = std::fabs(z) * e.abs_error_bound + kU * std::fabs(out.value);
    out.terms = e.terms_used;
    return out;
  }
  const auto e = specfun::mittag_leffler({b, seq.gamma, seq.delta, p.nu}, z);
  const double lg = specfun::log_abs_gamma(seq.delta);
  const double head = std::exp(-b * lg);
  out.value = e.value - head;
  out.bound = e.abs_error_bound + kU * head * (2.0 + b * std::fabs(lg)) +
              kU * std::fabs(out.value);
  out.terms = e.terms_used;
  return out;
}

}  // namespace

EvalResult eval_via_mittag_leffler(const SeriesParams& params,
                                   const GammaArithmetic& seq, int m_max,
                                   double tol) {
  params.validate();
  validate(SequenceSpec{seq});
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  if (m_max < 0) throw DomainError("m_max must be nonnegative");
  if (!(params.z > -1.0)) {
    throw DomainError("mittag-leffler route requires z in (-1, 1]");
  }
  if (!(params.mu * params.alpha - params.beta > 0.0)) {
    throw DivergenceError("mittag-leffler route: outer exponent not positive",
                          "mu*alpha > beta");
  }
  const double r2 = params.r * params.r;
  const double log_a_min = log_min_gamma_sequence(seq);
  const double q = r2 * std::exp(-params.alpha * log_a_min);
  if (!(q < 1.0)) {
    std::ostringstream msg;
    msg << "mittag-leffler route: outer binomial series diverges (r^2 / a_min^alpha = "
        << q << ")";
    throw DivergenceError(msg.str(), "r^2 < (min a_n)^alpha");
  }
  const bool shifted = params.nu == 1.0;
  const double az = std::fabs(params.z);

  double sum = 0.0;
  double compensation = 0.0;
  double bound = 0.0;
  std::int64_t terms = 0;
  double coeff = 1.0;  // C(μ+m−1, m) (−r²)^m
  for (int m = 0; m <= m_max; ++m) {
    const double b = (params.mu + m) * params.alpha - params.beta;
    const Bracket br = bracket(params, seq, b, params.z, shifted);
    const double t = 2.0 * coeff * br.value;
    const double y = t - compensation;
    const double s = sum + y;
    compensation = (s - sum) - y;
    sum = s;
    bound += 2.0 * std::fabs(coeff) * br.bound + kU * (m + 2.0) * std::fabs(t);
    terms += br.terms;

    double magnitude = std::fabs(t);  // the same term with |z| in place of z
    if (params.z < 0.0) {
      magnitude = 2.0 * std::fabs(coeff) *
                  std::fabs(bracket(params, seq, b, az, shifted).value);
    }
    const double rho = q * std::max(1.0, (params.mu + m) / (m + 1.0));
    if ((rho < 1.0 && m >= 1) || r2 == 0.0) {
      const double tail = magnitude * rho / (1.0 - rho);
      if (tail <= tol / 4.0 || r2 == 0.0) {
        bound += tail + 2.0 * kU * std::fabs(sum);
        if (!(bound <= tol)) {
          throw ConvergenceError("mittag-leffler route: tolerance not reached",
                                 bound);
        }
        EvalResult r;
        r.value = sum;
        r.abs_error_bound = bound;
        r.terms_used = terms;
        r.method = shifted ? "mittag-leffler-shifted" : "mittag-leffler";
        return r;
      }
    }
    coeff *= -r2 * (params.mu + m) / (m + 1.0);
  }
  throw ConvergenceError("mittag-leffler route: m_max reached before the outer "
                         "series converged",
                         INFINITY);
}

PhiStarDifference eval_phi_star_difference(double nu, double r, double z,
                                           double tol) {
  if (!(nu > 0.0)) throw DomainError("phi-star route: nu must be positive");
  if (!(r > 0.0)) throw DomainError("phi-star route: r must be positive");
  if (!(std::fabs(z) < 1.0)) throw DomainError("phi-star route: requires |z| < 1");
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
  PhiStarDifference out;
  out.result.method = "phi-star-difference";
  if (z == 0.0) {
    out.result.terms_used = 1;
    return out;
  }
  const double inner_tol = tol * r / 2.0;
  const auto minus = specfun::hurwitz_lerch_phi_star(z, 2.0, {0.0, -r}, nu, inner_tol);
  const auto plus = specfun::hurwitz_lerch_phi_star(z, 2.0, {0.0, r}, nu, inner_tol);
  const std::complex<double> value =
      (minus.value - plus.value) / std::complex<double>(0.0, 2.0 * r);
  const double bound =
      (minus.abs_error_bound + plus.abs_error_bound) / (2.0 * r) +
      2.0 * kU * std::abs(value);
  out.imag_residual = std::fabs(value.imag());
  if (out.imag_residual > std::max(tol, bound)) {
    std::ostringstream msg;
    msg << "phi-star route: imaginary residual " << out.imag_residual
        << " exceeds tolerance";
    throw PrecisionError(msg.str(), out.imag_residual);
  }
  if (!(bound <= tol)) {
    throw ConvergenceError("phi-star route: tolerance not reached", bound);
  }
  out.result.value = value.real();
  out.result.abs_error_bound = bound;
  out.result.terms_used = minus.terms_used + plus.terms_used;
  return out;
}

}  // namespace mathieu::series
