#include "summation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mathieu/errors.hpp"
#include "mathieu/quadrature/engine.hpp"
#include "mathieu/specfun/gamma.hpp"

namespace mathieu::series::detail {

namespace {

constexpr double kU = 1.1102230246251565e-16;
constexpr std::int64_t kMaxTerms = std::int64_t{1} << 27;

// f'(x) by Richardson-extrapolated central differences, with an estimate of
// the extrapolation uncertainty.
double derivative(const std::function<double(double)>& f, double x,
                  double* uncertainty) {
  const double d1 = f(x + 0.5) - f(x - 0.5);
  const double d2 = (f(x + 0.25) - f(x - 0.25)) * 2.0;
  const double d = (4.0 * d2 - d1) / 3.0;
  *uncertainty = std::fabs(d2 - d1) / 3.0 + 16.0 * kU * std::fabs(f(x)) * 4.0;
  return d;
}

// f'''(x) from a five-point central difference with step x/16, inflated by
// its truncation and rounding uncertainty.
double third_derivative_bound(const std::function<double(double)>& f, double x) {
  const double h = std::max(1.0, x / 16.0);
  const double a = f(x + 2.0 * h), b = f(x + h), c = f(x - h), d = f(x - 2.0 * h);
  const double d3 = (a - 2.0 * b + 2.0 * c - d) / (2.0 * h * h * h);
  const double noise = 16.0 * kU * (std::fabs(a) + 2.0 * std::fabs(b) + 2.0 * std::fabs(c) + std::fabs(d)) /
                       (2.0 * h * h * h);
  return d3 < 0.0 ? 1.25 * std::fabs(d3) + noise : -(std::fabs(d3) + noise);
}

}  // namespace

SumResult euler_maclaurin_sum(const std::function<double(double)>& f, double p,
                              double tol, double term_rel_error,
                              std::int64_t n_min) {
  if (!(p > 1.0)) throw DomainError("euler_maclaurin_sum: requires decay p > 1");
  std::int64_t n = std::max<std::int64_t>(n_min, 4);
  double fn = 0.0;
  double dfn = 0.0;
  double em_bound = 0.0;
  for (;; n *= 2) {
    if (n > kMaxTerms) {
      throw ConvergenceError("Euler-Maclaurin remainder did not reach tolerance",
                             em_bound);
    }
    const double x = static_cast<double>(n);
    fn = f(x);
    const double before = f(x - 1.0);
    const double after = f(x + 1.0);
    double unc = 0.0;
    dfn = derivative(f, x, &unc);
    const bool shape = fn > 0.0 && after < fn && dfn < 0.0 &&
                       before - 2.0 * fn + after >= -8.0 * kU * before;
    if (!shape) continue;
    // With f⁗ of one sign on [N, ∞) the remainder after the f'(N)/12
    // correction is at most |f'''(N)|/720. Both f''' < 0 at N and a smaller
    // |f'''| at 2N are required before that bound is used.
    const double d3 = third_derivative_bound(f, x);
    const double d3_far = third_derivative_bound(f, 2.0 * x);
    if (d3 > 0.0 && d3_far > 0.0 && d3_far < d3) {
      em_bound = d3 / 720.0 + unc / 12.0;
    } else {
      em_bound = (std::fabs(dfn) + unc) / 12.0;
    }
    if (em_bound <= tol / 4.0) break;
  }

  double partial = 0.0;
  double compensation = 0.0;
  double abs_sum = 0.0;
  for (std::int64_t k = n - 1; k >= 1; --k) {  // smallest terms first
    const double t = f(static_cast<double>(k));
    const double y = t - compensation;
    const double s = partial + y;
    compensation = (s - partial) - y;
    partial = s;
    abs_sum += std::fabs(t);
  }

  quadrature::QuadratureSpec qs;
  qs.abs_tol = tol / 8.0;
  qs.rel_tol = 1e-16;
  qs.max_refinement_levels = 10;
  qs.throw_on_nonconvergence = false;
  const EvalResult integral = quadrature::integrate_tail(
      f, static_cast<double>(n), qs, quadrature::TailDecay::algebraic(p));

  SumResult r;
  r.value = partial + integral.value + fn / 2.0 - dfn / 12.0;
  r.bound = em_bound + integral.abs_error_bound +
            term_rel_error * (abs_sum + std::fabs(integral.value) + fn) +
            2.0 * kU * std::fabs(r.value);
  r.terms = n - 1 + integral.terms_used;
  return r;
}

SumResult alternating_sum(const std::function<double(double)>& f, double tol,
                          double term_rel_error, std::int64_t n_min) {
  std::int64_t n = std::max<std::int64_t>(n_min, 2);
  double g0 = 0.0;
  double d0 = 0.0;
  for (;; n *= 2) {
    if (n > kMaxTerms) {
      throw ConvergenceError("alternating remainder did not reach tolerance",
                             d0 / 4.0);
    }
    const double x = static_cast<double>(n);
    g0 = f(x);
    const double g1 = f(x + 1.0);
    const double g2 = f(x + 2.0);
    d0 = g0 - g1;
    const double d1 = g1 - g2;
    const bool shape = d1 >= 0.0 && d0 >= d1;
    if (shape && d0 / 4.0 + term_rel_error * g0 <= tol / 4.0) break;
  }
  double partial = 0.0;
  double compensation = 0.0;
  double abs_sum = 0.0;
  for (std::int64_t k = n - 1; k >= 1; --k) {
    const double mag = f(static_cast<double>(k));
    const double t = (k % 2 == 0) ? mag : -mag;
    const double y = t - compensation;
    const double s = partial + y;
    compensation = (s - partial) - y;
    partial = s;
    abs_sum += mag;
  }
  const double remainder = g0 / 2.0 + d0 / 4.0;
  SumResult r;
  r.value = partial + ((n % 2 == 0) ? remainder : -remainder);
  r.bound = d0 / 4.0 + term_rel_error * (abs_sum + 2.0 * g0) +
            2.0 * kU * std::fabs(r.value);
  r.terms = n + 1;
  return r;
}

TermModel::TermModel(const SeriesParams& params, const SequenceSpec& seq)
    : params_(params), seq_(seq) {
  log_gamma_nu_ = specfun::log_abs_gamma(params.nu);
  r2_ = params.r * params.r;
}

double TermModel::log_weight(double x) const {
  if (params_.nu == 1.0) return 0.0;
  return specfun::log_gamma_ratio(x, params_.nu, 1.0) - log_gamma_nu_;
}

double TermModel::log_core(double x, double log_a, double* magnitude) const {
  const double alpha_la = params_.alpha * log_a;
  double log_den = alpha_la;
  if (r2_ > 0.0) {
    const double log_r2 = std::log(r2_);
    log_den = alpha_la >= log_r2 ? alpha_la + std::log1p(std::exp(log_r2 - alpha_la))
                                 : log_r2 + std::log1p(std::exp(alpha_la - log_r2));
  }
  const double lw = log_weight(x);
  const double beta_la = params_.beta == 0.0 ? 0.0 : params_.beta * log_a;
  if (magnitude != nullptr) {
    *magnitude = std::fabs(beta_la) + params_.mu * (std::fabs(log_den) + 2.0) +
                 std::fabs(lw) + std::fabs(log_a);
  }
  return std::numbers::ln2 + beta_la - params_.mu * log_den + lw;
}

TermModel::Term TermModel::evaluate(std::int64_t n) const {
  Term t;
  const double x = static_cast<double>(n);
  double magnitude = 0.0;
  t.log_abs = log_core(x, log_sequence(seq_, n), &magnitude);
  const double az = std::fabs(params_.z);
  if (az == 0.0) {
    t.value = 0.0;
    return t;
  }
  if (az != 1.0) {
    const double lz = x * std::log(az);
    t.log_abs += lz;
    magnitude += std::fabs(lz);
  }
  const double v = std::exp(t.log_abs);
  t.value = (params_.z < 0.0 && n % 2 == 1) ? -v : v;
  t.rel_error = kU * (16.0 + 2.0 * magnitude);
  return t;
}

double TermModel::smooth(double x) const {
  const auto& p = std::get<PowerOfIndex>(seq_);
  return std::exp(log_core(x, p.gamma * std::log(x), nullptr));
}

double TermModel::smooth_rel_error(double x_max) const {
  const auto& p = std::get<PowerOfIndex>(seq_);
  const double la = p.gamma * std::log(x_max);
  const double lr = r2_ > 0.0 ? std::fabs(std::log(r2_)) : 0.0;
  const double magnitude = params_.beta * la +
                           params_.mu * (params_.alpha * la + lr + 2.0) +
                           (std::fabs(params_.nu - 1.0) + 1.0) * std::log(x_max) +
                           std::fabs(log_gamma_nu_) + la;
  return kU * (16.0 + 2.0 * magnitude);
}

}  // namespace mathieu::series::detail
