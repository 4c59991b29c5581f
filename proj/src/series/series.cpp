#include "mathieu/series/series.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "mathieu/compensated.hpp"
#include "mathieu/errors.hpp"
#include "summation.hpp"

namespace mathieu::series {

namespace {

constexpr double kU = 1.1102230246251565e-16;
constexpr std::int64_t kTermBudget = 50'000'000;

void require_tolerance(double tol) {
  if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
}

EvalResult finish(double value, double bound, std::int64_t terms,
                  const char* method, double tol) {
  if (!(bound <= tol)) {
    std::ostringstream msg;
    msg << method << ": error bound " << bound << " exceeds tolerance " << tol;
    throw ConvergenceError(msg.str(), bound);
  }
  EvalResult r;
  r.value = value;
  r.abs_error_bound = bound;
  r.terms_used = terms;
  r.method = method;
  return r;
}

// Bound on sup_{k≥n} |t_{k+1}/t_k|; +inf when none is available yet.
double ratio_bound(const detail::TermModel& model, std::int64_t n,
                   double log_a_n, double log_a_next) {
  const SeriesParams& p = model.params();
  const double x = static_cast<double>(n);
  const double weight = std::max(1.0, (p.nu + x) / (x + 1.0));
  const double az = std::fabs(p.z);
  if (const auto* pw = std::get_if<PowerOfIndex>(&model.sequence())) {
    return az * weight * std::pow((x + 1.0) / x, pw->gamma * p.beta);
  }
  const auto& g = std::get<GammaArithmetic>(model.sequence());
  if (g.gamma * x + g.delta < 2.0) return std::numeric_limits<double>::infinity();
  const double excess = p.alpha * p.mu - p.beta;  // ≥ 0 under the guard
  const double shrink = std::exp(-excess * (log_a_next - log_a_n));
  const double r2 = p.r * p.r;
  const double lift = std::pow(1.0 + r2 * std::exp(-p.alpha * log_a_n), p.mu);
  return az * weight * shrink * lift;
}

EvalResult sum_geometric(const detail::TermModel& model, double tol) {
  CompensatedSum<double> acc;
  double rounding = 0.0;
  double log_a = log_sequence(model.sequence(), 1);
  for (std::int64_t n = 1; n < kTermBudget; ++n) {
    const auto t = model.evaluate(n);
    acc.add(t.value);
    rounding += std::fabs(t.value) * t.rel_error;
    const double log_next = log_sequence(model.sequence(), n + 1);
    const double at = std::fabs(t.value);
    if (at <= tol / 4.0) {
      const double rho = ratio_bound(model, n, log_a, log_next);
      if (rho < 1.0) {
        const double tail = at * rho / (1.0 - rho);
        if (tail <= tol / 4.0) {
          const double bound = tail + rounding + 2.0 * kU * std::fabs(acc.value());
          return finish(acc.value(), bound, n, "series/geometric-tail", tol);
        }
      }
    }
    log_a = log_next;
  }
  throw ConvergenceError("series: term budget exhausted", INFINITY);
}

EvalResult sum_table(const detail::TermModel& model, double tol) {
  const auto& table = std::get<ExplicitTable>(model.sequence());
  const SeriesParams& p = model.params();
  const std::int64_t len = static_cast<std::int64_t>(table.values.size());
  const double excess = p.alpha * p.mu - p.beta;
  if (excess < 0.0) {
    throw DivergenceError("table sequence: remainder cannot be bounded",
                          "mu*alpha >= beta");
  }
  const double az = std::fabs(p.z);
  CompensatedSum<double> acc;
  double rounding = 0.0;
  for (std::int64_t n = 1; n <= len; ++n) {
    const auto t = model.evaluate(n);
    acc.add(t.value);
    rounding += std::fabs(t.value) * t.rel_error;
    const double x = static_cast<double>(n);
    const double log_a = std::log(table.values[static_cast<std::size_t>(n - 1)]);
    double tail = INFINITY;
    if (az < 1.0) {
      const double rho = az * std::max(1.0, (p.nu + x + 1.0) / (x + 2.0));
      // 2 a_n^{β−αμ} w_{n+1} |z|^{n+1} / (1 − ρ)
      const double log_lead = std::numbers::ln2 - excess * log_a +
                              model.log_weight(x + 1.0) + (x + 1.0) * std::log(az);
      tail = std::exp(log_lead) / (1.0 - rho);
    } else if (n == len) {
      const double decay = table.tail_exponent * excess - std::max(p.nu - 1.0, 0.0);
      if (decay > 1.0) {
        tail = 2.0 * std::exp(-excess * log_a + model.log_weight(x)) * x /
               (decay - 1.0);
      }
    }
    if (tail <= tol / 4.0 && std::fabs(t.value) <= tol / 4.0) {
      const double bound = tail + rounding + 2.0 * kU * std::fabs(acc.value());
      return finish(acc.value(), bound, n, "series/table-majorant", tol);
    }
  }
  throw ConvergenceError(
      "table sequence too short to certify the remainder within tolerance",
      INFINITY);
}

EvalResult sum_smooth(const detail::TermModel& model, double tol) {
  const SeriesParams& p = model.params();
  const auto& pw = std::get<PowerOfIndex>(model.sequence());
  auto f = [&model](double x) { return model.smooth(x); };
  const double rel = model.smooth_rel_error(std::ldexp(1.0, 28));
  std::int64_t n_min = 16;
  if (p.r > 0.0) {
    n_min += 4 * static_cast<std::int64_t>(
                     std::ceil(std::pow(p.r, 2.0 / (pw.gamma * p.alpha))));
  }
  if (p.z > 0.0) {
    const double decay = pw.gamma * (p.mu * p.alpha - p.beta) - (p.nu - 1.0);
    const auto s = detail::euler_maclaurin_sum(f, decay, tol, rel, n_min);
    return finish(s.value, s.bound, s.terms, "series/euler-maclaurin", tol);
  }
  const auto s = detail::alternating_sum(f, tol, rel, n_min);
  return finish(s.value, s.bound, s.terms, "series/alternating-tail", tol);
}

}  // namespace

ConvergenceReport check_convergence(const SeriesParams& params,
                                    const SequenceSpec& seq) {
  params.validate();
  validate(seq);
  ConvergenceReport rep;
  const double az = std::fabs(params.z);
  const double excess = params.mu * params.alpha - params.beta;
  if (const auto* pw = std::get_if<PowerOfIndex>(&seq)) {
    rep.decay_exponent = pw->gamma * excess - (params.nu - 1.0);
    rep.guard = "gamma*(mu*alpha-beta) > nu";
    rep.verdict = (az < 1.0 || rep.decay_exponent > 1.0) ? Verdict::converges
                                                         : Verdict::diverges;
  } else if (std::holds_alternative<GammaArithmetic>(seq)) {
    rep.decay_exponent = excess;
    rep.guard = az < 1.0 ? "mu*alpha >= beta" : "mu*alpha > beta";
    const bool ok = excess > 0.0 || (excess == 0.0 && az < 1.0);
    rep.verdict = ok ? Verdict::converges : Verdict::diverges;
  } else {
    const auto& t = std::get<ExplicitTable>(seq);
    if (az < 1.0) {
      rep.guard = "mu*alpha >= beta";
      rep.decay_exponent = t.tail_exponent * excess - (params.nu - 1.0);
      rep.verdict = excess >= 0.0 ? Verdict::converges : Verdict::unknown;
    } else if (!(t.tail_exponent > 0.0)) {
      rep.guard = "tail_exponent > 0";
      rep.verdict = Verdict::unknown;
    } else {
      rep.decay_exponent = t.tail_exponent * excess - std::max(params.nu - 1.0, 0.0);
      rep.guard = "tail_exponent*(mu*alpha-beta) - max(nu-1,0) > 1";
      rep.verdict = rep.decay_exponent > 1.0 ? Verdict::converges : Verdict::diverges;
    }
  }
  if (params.z == 0.0 && rep.verdict != Verdict::diverges) {
    rep.verdict = Verdict::converges;
  }
  return rep;
}

EvalResult eval_series(const SeriesParams& params, const SequenceSpec& seq,
                       double tol) {
  require_tolerance(tol);
  const ConvergenceReport rep = check_convergence(params, seq);
  if (rep.verdict != Verdict::converges) {
    std::ostringstream msg;
    msg << "series does not converge for these parameters (decay exponent "
        << rep.decay_exponent << ")";
    throw DivergenceError(msg.str(), rep.guard);
  }
  if (params.z == 0.0) return finish(0.0, 0.0, 1, "series/zero-argument", tol);
  const detail::TermModel model(params, seq);
  if (std::holds_alternative<ExplicitTable>(seq)) return sum_table(model, tol);
  if (std::holds_alternative<PowerOfIndex>(seq) && std::fabs(params.z) == 1.0) {
    return sum_smooth(model, tol);
  }
  return sum_geometric(model, tol);
}

EvalResult eval_S(double r, double tol) {
  if (!(r >= 0.0)) throw DomainError("eval_S: r must be nonnegative");
  return eval_series(SeriesParams{2.0, 1.0, 2.0, 1.0, r, 1.0}, PowerOfIndex{1.0},
                     tol);
}

EvalResult eval_S_mu(double mu, double r, double tol) {
  if (!(mu > 1.0)) {
    throw DivergenceError("eval_S_mu: S_mu diverges", "mu > 1");
  }
  return eval_series(SeriesParams{2.0, 1.0, mu, 1.0, r, 1.0}, PowerOfIndex{1.0},
                     tol);
}

EvalResult eval_S_tilde(SeriesParams params, const SequenceSpec& seq,
                        double tol) {
  params.z = -1.0;
  return eval_series(params, seq, tol);
}

}  // namespace mathieu::series
