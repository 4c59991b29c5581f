#include "mathieu/specfun/hypergeometric.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "mathieu/errors.hpp"
#include "mathieu/specfun/gamma.hpp"
#include "real_ops.hpp"
#include "series_engine.hpp"

namespace mathieu::specfun {

namespace {

using detail::quad;

double limit_for(Cancellation mode) {
  return mode == Cancellation::strict ? kExtendedCancellationLimit : INFINITY;
}

bool small_integer(double v) { return v == std::floor(v) && v >= 1.0 && v <= 8.0; }

template <typename Real>
EvalResult finish(const detail::SeriesOutcome<Real>& out, double limit,
                  const char* method) {
  const double ratio = out.cancellation();
  if (ratio > limit) {
    std::ostringstream msg;
    msg << method << ": cancellation ratio " << ratio << " exceeds " << limit;
    throw PrecisionError(msg.str(), ratio);
  }
  EvalResult r;
  r.value = static_cast<double>(out.sum);
  r.abs_error_bound = out.abs_error;
  if constexpr (!std::is_same_v<Real, double>) {
    r.abs_error_bound += detail::unit_roundoff<double>() * std::fabs(r.value);
  }
  r.terms_used = out.terms;
  r.method = method;
  return r;
}

// Γ(a + nA) / Γ(b + nB) · xⁿ / n! evaluated from scratch in log space.
template <typename Real>
Real fox_wright_term(const FoxWright11Params& p, double x, std::int64_t n) {
  const double nn = static_cast<double>(n);
  const double bottom = p.b + nn * p.B;
  if (detail::is_nonpositive_integer(bottom)) return Real(0);
  if (x == 0.0 && n > 0) return Real(0);
  int s_top = 1;
  int s_bottom = 1;
  const Real rn = Real(nn);
  const Real lt = detail::lgamma_signed(Real(p.a) + rn * Real(p.A), &s_top);
  const Real lb = detail::lgamma_signed(Real(p.b) + rn * Real(p.B), &s_bottom);
  int s_fact = 1;
  const Real lf = detail::lgamma_signed(Real(nn + 1.0), &s_fact);
  Real lx{0};
  int sign = s_top * s_bottom;
  if (n > 0) {
    lx = Real(nn) * detail::log_r(Real(std::fabs(x)));
    if (x < 0.0 && n % 2 == 1) sign = -sign;
  }
  const Real v = detail::exp_r(lt - lb + lx - lf);
  return sign > 0 ? v : -v;
}

template <typename Real>
detail::SeriesOutcome<Real> fox_wright_sum(const FoxWright11Params& p,
                                           double x) {
  p.validate();
  for (double v = p.a; v <= 0.0; v += p.A) {
    if (v == std::floor(v)) {
      throw DomainError("fox_wright_11: Γ(a + nA) hits a pole");
    }
  }
  detail::SeriesControl c;
  c.rel_target = std::is_same_v<Real, double> ? 1e-17 : 1e-34;
  c.min_terms = 4;
  while (p.a + c.min_terms * p.A < 2.0 || p.b + c.min_terms * p.B < 2.0) {
    ++c.min_terms;
  }

  const bool direct = p.a <= 0.0 || p.b <= 0.0;
  const bool integer_steps = small_integer(p.A) && small_integer(p.B);
  if (direct || (!integer_steps && !std::is_same_v<Real, double>)) {
    c.term_error_factor = 64.0;
    auto next = [&](std::int64_t n, Real) {
      return detail::Step<Real>{fox_wright_term<Real>(p, x, n + 1), false};
    };
    return detail::sum_series(fox_wright_term<Real>(p, x, 0), next, c);
  }

  const Real t0 = fox_wright_term<Real>(p, x, 0);
  if (integer_steps) {
    const int ia = static_cast<int>(p.A);
    const int ib = static_cast<int>(p.B);
    auto next = [&](std::int64_t n, Real t) {
      const Real nn = Real(static_cast<double>(n));
      Real num = Real(x);
      const Real top = Real(p.a) + nn * Real(p.A);
      for (int j = 0; j < ia; ++j) num *= top + Real(j);
      Real den = nn + Real(1);
      const Real bottom = Real(p.b) + nn * Real(p.B);
      for (int j = 0; j < ib; ++j) den *= bottom + Real(j);
      return detail::Step<Real>{t * num / den, x == 0.0};
    };
    return detail::sum_series(t0, next, c);
  }
  auto next = [&](std::int64_t n, Real t) {
    const double nn = static_cast<double>(n);
    const double lr = log_gamma_ratio(p.a + nn * p.A, p.A, 0.0) -
                      log_gamma_ratio(p.b + nn * p.B, p.B, 0.0);
    return detail::Step<Real>{t * (x / (nn + 1.0)) * std::exp(lr), x == 0.0};
  };
  return detail::sum_series(t0, next, c);
}

template <typename Real>
detail::SeriesOutcome<Real> pfq_sum(const HypergeometricParams& p, double x) {
  p.validate();
  detail::SeriesControl c;
  c.rel_target = std::is_same_v<Real, double> ? 1e-17 : 1e-34;
  double reach = 0.0;
  for (double v : p.numerator) reach = std::max(reach, std::fabs(v));
  for (double v : p.denominator) reach = std::max(reach, std::fabs(v));
  c.min_terms = static_cast<std::int64_t>(reach) + 3;
  auto next = [&](std::int64_t n, Real t) {
    const Real nn = Real(static_cast<double>(n));
    Real num = Real(x);
    bool zero = x == 0.0;
    for (double v : p.numerator) {
      if (v + static_cast<double>(n) == 0.0) zero = true;
      num *= Real(v) + nn;
    }
    Real den = nn + Real(1);
    for (double v : p.denominator) den *= Real(v) + nn;
    return detail::Step<Real>{zero ? Real(0) : t * num / den, zero};
  };
  return detail::sum_series(Real(1), next, c);
}

}  // namespace

void FoxWright11Params::validate() const {
  if (!(A > 0.0) || !(B > 0.0)) {
    throw DomainError("fox_wright_11: A and B must be positive");
  }
  if (!(1.0 + B - A > 0.0)) {
    throw DomainError("fox_wright_11: requires 1 + B − A > 0");
  }
  if (!std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("fox_wright_11: non-finite parameter");
  }
}

EvalResult fox_wright_11(const FoxWright11Params& params, double x) {
  return finish(fox_wright_sum<double>(params, x), kCancellationLimit,
                "fox-wright-series");
}

EvalResult fox_wright_11_extended(const FoxWright11Params& params, double x,
                                  Cancellation mode) {
  return finish(fox_wright_sum<quad>(params, x), limit_for(mode),
                "fox-wright-series-extended");
}

std::vector<double> HypergeometricParams::delta(int q, double lambda) {
  if (q < 1) throw DomainError("delta: q must be positive");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(q));
  for (int j = 0; j < q; ++j) out.push_back((lambda + j) / q);
  return out;
}

void HypergeometricParams::validate() const {
  if (numerator.size() > denominator.size()) {
    throw DomainError("hypergeometric_pfq: requires p <= q");
  }
  for (double v : denominator) {
    if (detail::is_nonpositive_integer(v)) {
      throw DomainError("hypergeometric_pfq: denominator parameter " +
                        std::to_string(v) + " is a nonpositive integer");
    }
  }
}

EvalResult hypergeometric_pfq(const HypergeometricParams& params, double x) {
  return finish(pfq_sum<double>(params, x), kCancellationLimit, "pfq-series");
}

EvalResult hypergeometric_pfq_extended(const HypergeometricParams& params,
                                       double x, Cancellation mode) {
  return finish(pfq_sum<quad>(params, x), limit_for(mode),
                "pfq-series-extended");
}

}  // namespace mathieu::specfun
