#include "mathieu/quadrature/representations.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <unordered_map>

#include "../series/summation.hpp"
#include "mathieu/errors.hpp"
#include "mathieu/series/series.hpp"
#include "mathieu/specfun/bessel.hpp"
#include "mathieu/specfun/gamma.hpp"
#include "mathieu/specfun/hypergeometric.hpp"

namespace mathieu::quadrature {

namespace {

constexpr double kU = 1.1102230246251565e-16;
constexpr double kKernelRelTarget = 1e-13;

struct KernelValue {
  double value = 0.0;
  double error = 0.0;
  bool resolved = true;
};

// A kernel evaluated with `strict` set reports unresolved points; without
// it the extended sum returns an absolute bound however large the
// cancellation.
using Kernel = std::function<KernelValue(double, bool strict)>;

// Tries the double-precision sum first and falls back to 113-bit
// accumulation when cancellation eats the accuracy.
template <typename Fast, typename Slow>
KernelValue resolve(Fast&& fast, Slow&& slow, bool strict) {
  try {
    const EvalResult r = fast();
    if (r.abs_error_bound <= kKernelRelTarget * std::fabs(r.value) + 1e-300) {
      return {r.value, r.abs_error_bound, true};
    }
  } catch (const PrecisionError&) {
  }
  try {
    const EvalResult r =
        slow(strict ? specfun::Cancellation::strict : specfun::Cancellation::widen);
    return {r.value, r.abs_error_bound, true};
  } catch (const PrecisionError&) {
    return {0.0, 0.0, false};
  }
}

double one_minus_z_exp(double z, double t) {
  if (z == 1.0) return -std::expm1(-t);
  return (1.0 - z) - z * std::expm1(-t);
}

// ∫_0^∞ prefactor · outer(t) · kernel(t) dt for integrands that decay at
// least like e^{−t}. The range is cut where the samples become negligible
// or the kernel stops being computable.
EvalResult laplace_type_integral(const std::function<double(double)>& outer,
                                 const Kernel& kernel, double left_power,
                                 double prefactor, const QuadratureSpec& spec,
                                 const char* method) {
  const double target = spec.abs_tol / std::max(std::fabs(prefactor), 1e-300);
  // Walk outward on a geometric grid; the integral is cut at the last sample
  // where the kernel is still resolved or once three consecutive samples are
  // negligible. Twice the largest of the last three samples stands in for the
  // remainder (the integrand decays at least like e^{−t}).
  double cut = 0.0;
  double recent[3] = {INFINITY, INFINITY, INFINITY};
  for (int k = 0;; ++k) {
    const double s = 8.0 * std::pow(1.25, k);
    const double o = outer(s);
    double magnitude = 0.0;
    if (o != 0.0) {
      const KernelValue kv = kernel(s, true);
      if (!kv.resolved) {
        if (k == 0) {
          throw PrecisionError(std::string(method) +
                                   ": kernel cannot be resolved on the integration range",
                               INFINITY);
        }
        break;
      }
      magnitude = std::fabs(o) * (std::fabs(kv.value) + kv.error);
    }
    cut = s;
    recent[k % 3] = magnitude;
    const double worst = std::max({recent[0], recent[1], recent[2]});
    if (worst * s <= 1e-3 * target || s > 4096.0) break;
  }
  const double tail = 2.0 * std::max({recent[0], recent[1], recent[2]});

  // |outer| times the kernel bound at each node, so that the kernel's
  // contribution can be integrated rather than bounded by max times length
  std::unordered_map<double, double> node_error;
  auto integrand = [&](double t) {
    const double o = outer(t);
    if (o == 0.0) return 0.0;
    const KernelValue k = kernel(t, false);
    if (!k.resolved) {
      throw PrecisionError(std::string(method) + ": kernel lost all precision",
                           INFINITY);
    }
    node_error[t] = std::fabs(o) * k.error;
    return o * k.value;
  };
  QuadratureSpec inner = spec;
  inner.abs_tol = target / 4.0;
  const EvalResult q = integrate_finite(integrand, 0.0, cut, inner, left_power, 0.0);

  auto error_density = [&](double t) {
    if (const auto it = node_error.find(t); it != node_error.end()) return it->second;
    const double o = outer(t);
    if (o == 0.0) return 0.0;
    return std::fabs(o) * kernel(t, false).error;
  };
  QuadratureSpec loose = spec;
  loose.rel_tol = 1e-2;
  loose.abs_tol = 1e-3 * target;
  loose.throw_on_nonconvergence = false;
  const EvalResult e = integrate_finite(error_density, 0.0, cut, loose, left_power, 0.0);
  const double kernel_error = 2.0 * std::fabs(e.value) + e.abs_error_bound;

  EvalResult r;
  r.value = prefactor * q.value;
  r.abs_error_bound =
      std::fabs(prefactor) * (q.abs_error_bound + kernel_error + tail) +
      2.0 * kU * std::fabs(r.value);
  r.terms_used = q.terms_used;
  r.method = method;
  return r;
}

void require_convergent(const series::SeriesParams& params,
                        const series::SequenceSpec& seq) {
  const auto rep = series::check_convergence(params, seq);
  if (rep.verdict != series::Verdict::converges) {
    throw DivergenceError("series does not converge for these parameters",
                          rep.guard);
  }
}

}  // namespace

EvalResult eval_classical_integral(double r, const QuadratureSpec& spec) {
  if (!(r >= 0.0)) throw DomainError("classical integral: r must be nonnegative");
  auto f = [r](double t) {
    if (r == 0.0) return t * t / std::expm1(t);
    return t * std::sin(r * t) / (r * std::expm1(t));
  };
  EvalResult res = integrate_semi_infinite(f, spec, 1.0, TailDecay::exponential(1.0));
  res.method = "classical-integral";
  return res;
}

EvalResult eval_theorem1(const series::SeriesParams& params,
                         const series::PowerOfIndex& seq,
                         const QuadratureSpec& spec, KernelForm form) {
  spec.validate();
  require_convergent(params, seq);
  const double c = seq.gamma * (params.mu * params.alpha - params.beta);
  const double step = seq.gamma * params.alpha;
  const bool printed = form == KernelForm::printed;
  const double power = printed ? c - 1.0 : c;
  const double lower = printed ? c : c + 1.0;
  const double left_power = params.z == 1.0 ? power - params.nu - 1.0 : power;
  if (!(left_power > -1.0)) {
    throw DivergenceError("theorem1: integrand not integrable at t = 0",
                          printed ? "gamma*(mu*alpha-beta) > nu + 1"
                                  : "gamma*(mu*alpha-beta) > nu");
  }
  if (!(lower > 0.0)) {
    throw DomainError("theorem1: lower Fox-Wright parameter must be positive");
  }
  const char* method = printed ? "theorem1-printed" : "theorem1";
  if (params.z == 0.0) return EvalResult{0.0, 0.0, 1, method};

  const double z = params.z;
  const double nu = params.nu;
  auto outer = [=](double t) {
    return std::exp(power * std::log(t) - t -
                    (nu + 1.0) * std::log(one_minus_z_exp(z, t)));
  };
  const specfun::FoxWright11Params fw{params.mu, 1.0, lower, step};
  const double r2 = params.r * params.r;
  auto kernel = [=](double t, bool strict) {
    const double x = -r2 * std::pow(t, step);
    return resolve([&] { return specfun::fox_wright_11(fw, x); },
                   [&](auto mode) { return specfun::fox_wright_11_extended(fw, x, mode); },
                   strict);
  };
  const double prefactor =
      2.0 * nu * z / specfun::gamma(params.mu);
  return laplace_type_integral(outer, kernel, left_power, prefactor, spec, method);
}

EvalResult eval_remark1(const series::SeriesParams& params,
                        const series::PowerOfIndex& seq,
                        const QuadratureSpec& spec) {
  if (std::fabs(params.z) != 1.0) {
    throw DomainError("remark1: z must be 1 or -1");
  }
  return eval_theorem1(params, seq, spec);
}

EvalResult eval_remark2(series::SeriesParams params, double x,
                        const series::PowerOfIndex& seq,
                        const QuadratureSpec& spec) {
  if (!(x > 0.0)) throw DomainError("remark2: x must be positive");
  params.z = std::exp(-x);
  return eval_theorem1(params, seq, spec);
}

EvalResult eval_remark3(int q, const series::SeriesParams& params,
                        const QuadratureSpec& spec) {
  spec.validate();
  if (q < 1) throw DomainError("remark3: q must be a positive integer");
  const series::PowerOfIndex seq{q / params.alpha};
  require_convergent(params, seq);
  const double c = q * (params.mu - params.beta / params.alpha);
  if (!(c > 1.0)) {
    throw DivergenceError("remark3: parameter condition violated",
                          "mu - beta/alpha > 1/q");
  }
  const double z = params.z;
  const double nu = params.nu;
  const double r = params.r;

  if (q == 2 && params.beta == 0.0) {
    const double mu = params.mu;
    const double left_power = z == 1.0 ? 2.0 * mu - 1.0 - nu : 2.0 * mu - 1.0;
    if (!(left_power > -1.0)) {
      throw DivergenceError("remark5: integrand not integrable at t = 0",
                            "2*mu > nu");
    }
    if (z == 0.0) return EvalResult{0.0, 0.0, 1, "remark5-0F1"};
    auto outer = [=](double t) {
      const double l = z == 1.0 ? std::log(-std::expm1(-t)) : std::log1p(-z * std::exp(-t));
      return std::exp((2.0 * mu - 1.0) * std::log(t)) * std::expm1(-nu * l);
    };
    const double b = mu + 0.5;
    const double log_gamma_b = specfun::log_abs_gamma(b);
    const specfun::HypergeometricParams hp{{}, {b}};
    auto kernel = [=](double t, bool strict) {
      const double y = r * t;
      if (y <= 12.0) {
        return resolve(
            [&] { return specfun::hypergeometric_pfq(hp, -y * y / 4.0); },
            [&](auto mode) { return specfun::hypergeometric_pfq_extended(hp, -y * y / 4.0, mode); },
            strict);
      }
      const double scale = std::exp(log_gamma_b + (1.0 - b) * std::log(y / 2.0));
      const double j = specfun::bessel_j(b - 1.0, y);
      const double envelope = std::sqrt(2.0 / (std::numbers::pi * y));
      return KernelValue{scale * j, 1e-14 * scale * envelope, true};
    };
    const double prefactor = 2.0 / specfun::gamma(2.0 * mu);
    return laplace_type_integral(outer, kernel, left_power, prefactor, spec,
                                 "remark5-0F1");
  }

  const double left_power = z == 1.0 ? c - nu - 1.0 : c;
  if (!(left_power > -1.0)) {
    throw DivergenceError("remark3: integrand not integrable at t = 0",
                          "q*(mu - beta/alpha) > nu");
  }
  if (z == 0.0) return EvalResult{0.0, 0.0, 1, "remark3-1Fq"};
  auto outer = [=](double t) {
    return std::exp(c * std::log(t) - t - (nu + 1.0) * std::log(one_minus_z_exp(z, t)));
  };
  const specfun::HypergeometricParams hp{
      {params.mu}, specfun::HypergeometricParams::delta(q, c + 1.0)};
  const double r2 = r * r;
  auto kernel = [=](double t, bool strict) {
    const double x = -r2 * std::pow(t / q, q);
    return resolve([&] { return specfun::hypergeometric_pfq(hp, x); },
                   [&](auto mode) { return specfun::hypergeometric_pfq_extended(hp, x, mode); },
                   strict);
  };
  const double prefactor = 2.0 * nu * z / specfun::gamma(c + 1.0);
  return laplace_type_integral(outer, kernel, left_power, prefactor, spec,
                               "remark3-1Fq");
}

namespace {

struct InnerSum {
  double value = 0.0;
  double bound = 0.0;
};

// f_r(t) = Σ 2(A − r²) a^{β−α/2} / (A + r²)², A = a^α t².
InnerSum theorem2_inner(double alpha, double beta, const series::PowerOfIndex& seq,
                        double r, double t, double tol) {
  const double r2 = r * r;
  const double lift = beta - alpha / 2.0;
  auto g = [=](double x) {
    const double la = seq.gamma * std::log(x);
    const double big = std::exp(alpha * la) * t * t;
    const double ratio = (big - r2) / (big + r2);
    return 2.0 * std::exp(lift * la) / (big + r2) * ratio;
  };
  const double p = seq.gamma * (1.5 * alpha - beta);
  std::int64_t n_min = 16;
  if (r > 0.0) {
    n_min += 4 * static_cast<std::int64_t>(
                     std::ceil(std::pow(r / t, 2.0 / (seq.gamma * alpha))));
  }
  const double rel = kU * (24.0 + 4.0 * (std::fabs(lift) + alpha) * seq.gamma * 28.0 +
                           4.0 * std::fabs(std::log(t)));
  const auto s = series::detail::euler_maclaurin_sum(g, p, tol, rel, n_min);
  return {s.value, s.bound};
}

}  // namespace

double theorem2_integrand(double alpha, double beta,
                          const series::PowerOfIndex& seq, double r, double t,
                          KernelForm form) {
  if (!(t > 1.0)) throw DomainError("theorem2 integrand: requires t > 1");
  const double u = t - 1.0;
  const double root = std::sqrt(u * (2.0 + u));
  const double f = theorem2_inner(alpha, beta, seq, r, t, 1e-15 / (t * t)).value;
  return form == KernelForm::corrected ? t / root * f : t * root * f;
}

EvalResult eval_theorem2(double alpha, double beta,
                         const series::PowerOfIndex& seq, double r,
                         const QuadratureSpec& spec, KernelForm form) {
  spec.validate();
  if (!(alpha > 0.0) || !(beta >= 0.0) || !(r >= 0.0) || !(seq.gamma > 0.0)) {
    throw DomainError("theorem2: requires alpha > 0, beta >= 0, r >= 0, gamma > 0");
  }
  if (!(seq.gamma * (1.5 * alpha - beta) > 1.0)) {
    throw DivergenceError("theorem2: f_r diverges", "gamma*(3*alpha/2 - beta) > 1");
  }
  if (form == KernelForm::printed) {
    throw DivergenceError(
        "theorem2: the kernel t*sqrt(t^2-1) tends to a positive constant times "
        "f_r's limit, so the integral diverges",
        "integrand -> 0 as t -> infinity");
  }
  const double inner_scale = 1e-2 * spec.abs_tol;
  double inner_error = 0.0;  // max over nodes of t² · (error of f_r(t))
  auto integrand = [&](double u) {
    const double t = 1.0 + u;
    const InnerSum f =
        theorem2_inner(alpha, beta, seq, r, t, inner_scale / (t * t));
    inner_error = std::max(inner_error, f.bound * t * t);
    return t / std::sqrt(u * (2.0 + u)) * f.value;
  };
  QuadratureSpec outer = spec;
  outer.abs_tol = spec.abs_tol / 4.0;
  const EvalResult head = integrate_finite(integrand, 0.0, 1.0, outer, -0.5, 0.0);
  const EvalResult tail = integrate_tail(integrand, 1.0, outer, TailDecay::algebraic(2.0));
  EvalResult res;
  res.value = 2.0 / std::numbers::pi * (head.value + tail.value);
  res.abs_error_bound =
      2.0 / std::numbers::pi *
          (head.abs_error_bound + tail.abs_error_bound +
           inner_error * std::numbers::pi / 2.0) +
      2.0 * kU * std::fabs(res.value);
  res.terms_used = head.terms_used + tail.terms_used;
  res.method = "theorem2";
  return res;
}

ComplexEvalResult eval_charfn_integral(double mu, double nu, double r, double t,
                                       const QuadratureSpec& spec) {
  spec.validate();
  if (!(mu > -0.5)) throw DomainError("charfn integral: requires mu > -1/2");
  if (!(nu > 0.0)) throw DomainError("charfn integral: requires nu > 0");
  if (!(r > 0.0)) throw DomainError("charfn integral: requires r > 0");
  if (!(2.0 * (mu + 1.0) - 1.0 > nu)) {
    throw DivergenceError("charfn integral: distribution does not exist",
                          "2*(mu+1) - 1 > nu");
  }
  EvalResult norm;
  for (double tol = std::max(spec.abs_tol * 1e-2, 1e-15);; tol *= 10.0) {
    try {
      norm = series::eval_series(series::SeriesParams{2.0, 1.0, mu + 1.0, nu, r, 1.0},
                                 series::PowerOfIndex{1.0}, tol);
      break;
    } catch (const ConvergenceError&) {
      if (tol >= 1e-10) throw;
    }
  }
  const double prefactor =
      std::sqrt(std::numbers::pi) /
      (std::pow(2.0 * r, mu - 0.5) * specfun::gamma(mu + 1.0) * norm.value);

  const double ct = std::cos(t);
  const double st = std::sin(t);
  const double half = std::sin(t / 2.0);
  const double wrapped = std::remainder(t, 2.0 * std::numbers::pi);
  const bool at_origin = wrapped == 0.0;
  auto bracket = [=](double u) {
    const std::complex<double> one_minus_w(
        2.0 * half * half - std::expm1(-u) * ct, -std::exp(-u) * st);
    return std::exp(-nu * std::log(one_minus_w)) - 1.0;
  };
  auto radial = [=](double u) {
    return std::pow(u, mu + 0.5) * specfun::bessel_j(mu - 0.5, r * u);
  };
  const double left_power = at_origin ? 2.0 * mu - nu : 2.0 * mu;
  QuadratureSpec inner = spec;
  inner.abs_tol = spec.abs_tol / (4.0 * prefactor);
  inner.split_point = std::max(1.0, std::min(std::fabs(t), 4.0));
  const EvalResult re = integrate_semi_infinite(
      [&](double u) { return radial(u) * bracket(u).real(); }, inner, left_power,
      TailDecay::exponential(1.0));
  EvalResult im{0.0, 0.0, 0, ""};
  if (!at_origin && st != 0.0) {
    im = integrate_semi_infinite(
        [&](double u) { return radial(u) * bracket(u).imag(); }, inner,
        std::max(left_power, 2.0 * mu), TailDecay::exponential(1.0));
  }
  ComplexEvalResult res;
  res.value = prefactor * std::complex<double>(re.value, im.value);
  res.abs_error_bound =
      prefactor * (re.abs_error_bound + im.abs_error_bound) +
      std::abs(res.value) * (norm.abs_error_bound / norm.value + 8.0 * kU);
  res.terms_used = re.terms_used + im.terms_used;
  res.method = "charfn-integral";
  return res;
}

}  // namespace mathieu::quadrature
