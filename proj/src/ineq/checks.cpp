#include "mathieu/ineq/checks.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <type_traits>

#include "mathieu/compensated.hpp"
#include "mathieu/dist/distribution.hpp"
#include "mathieu/errors.hpp"
#include "mathieu/series/series.hpp"
#include "../series/summation.hpp"

namespace mathieu::ineq {

namespace {

using series::PowerOfIndex;
using series::SeriesParams;
using series::SequenceSpec;

constexpr double kU = std::numeric_limits<double>::epsilon() / 2;

// Series value at tol, or at the tightest of tol·10^k (k ≤ 5) it can certify.
template <typename Eval>
EvalResult with_retry(Eval&& eval, double tol) {
  for (double t = tol;; t *= 10.0) {
    try {
      return eval(t);
    } catch (const ConvergenceError&) {
      if (t >= tol * 1e5) throw;
    }
  }
}

EvalResult evaluate(const SeriesParams& p, const SequenceSpec& s, double tol) {
  return with_retry([&](double t) { return series::eval_series(p, s, t); }, tol);
}

using Grid = std::vector<std::pair<std::string, double>>;

Grid describe_point(const SeriesParams& p, const SequenceSpec& s) {
  Grid g{{"alpha", p.alpha}, {"beta", p.beta}, {"mu", p.mu}, {"nu", p.nu}, {"z", p.z}};
  std::visit(
      [&](const auto& v) {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, series::PowerOfIndex>) {
          g.emplace_back("gamma", v.gamma);
        } else if constexpr (std::is_same_v<V, series::GammaArithmetic>) {
          g.emplace_back("gamma", v.gamma);
          g.emplace_back("delta", v.delta);
        } else {
          g.emplace_back("table_length", static_cast<double>(v.values.size()));
        }
      },
      s);
  return g;
}

CheckReport make_report(std::string id, Grid grid, double lhs, double rhs,
                        double operand_error) {
  CheckReport r;
  r.check_id = std::move(id);
  r.grid_point = std::move(grid);
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = lhs - rhs;
  r.error_budget = kBudgetFactor * (operand_error + 2.0 * kU * (std::fabs(lhs) + std::fabs(rhs)));
  r.verdict = classify(r.margin, r.error_budget);
  return r;
}

void require_unit_argument(const SeriesParams& p, const char* who) {
  if (!(p.z >= 0.0 && p.z <= 1.0)) {
    throw DomainError(std::string(who) + ": requires 0 <= z <= 1");
  }
}

void require_x(double x, const char* who) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(who) + ": x = r^2 must be finite and >= 0");
  }
}

EvalResult f_of_x(SeriesParams p, const SequenceSpec& s, double x, double tol) {
  p.r = std::sqrt(x);
  return evaluate(p, s, tol);
}

double binomial(int k, int j) {
  double c = 1.0;
  for (int i = 1; i <= j; ++i) c = c * (k - j + i) / i;
  return c;
}

// Shared by 002 and re1 so that the two report identical numbers.
CheckReport lower_bound_core(std::string id, Grid grid, const SeriesParams& params,
                             const SequenceSpec& seq, double tol) {
  const EvalResult s = evaluate(params, seq, tol);
  SeriesParams up = params;
  up.mu += 1.0;
  const EvalResult z0 = zeta_weight(params, seq, tol);
  const EvalResult z1 = zeta_weight(up, seq, tol);
  const double r2 = params.r * params.r;
  const double ratio = z1.value / z0.value;
  const double rhs = 2.0 * z0.value * std::exp(-params.mu * r2 * ratio);
  // d rhs = rhs (dζ0/ζ0 + μ r² dratio), dratio ≤ (dζ1 + ratio dζ0)/ζ0.
  const double rel_ratio = (z1.abs_error_bound + ratio * z0.abs_error_bound) / z0.value;
  const double rhs_err =
      rhs * (z0.abs_error_bound / z0.value + params.mu * r2 * rel_ratio + 4.0 * kU * (1.0 + params.mu * r2 * ratio));
  return make_report(std::move(id), std::move(grid), s.value, rhs,
                     s.abs_error_bound + rhs_err);
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

Verdict classify(double margin, double error_budget) {
  if (!std::isfinite(margin)) return Verdict::inconclusive;
  if (margin > error_budget) return Verdict::pass;
  if (margin < -error_budget) return Verdict::fail;
  return Verdict::inconclusive;
}

EvalResult zeta_weight(const SeriesParams& params, const SequenceSpec& seq, double tol) {
  SeriesParams p = params;
  p.r = 0.0;
  EvalResult s = evaluate(p, seq, 2.0 * tol);
  s.value /= 2.0;
  s.abs_error_bound /= 2.0;
  s.method = "zeta-weight/" + s.method;
  return s;
}

std::vector<CheckReport> check_complete_monotonicity(const SeriesParams& params,
                                                     const SequenceSpec& seq, int order_max,
                                                     const std::vector<double>& xs, double h,
                                                     double tol) {
  require_unit_argument(params, "monotone");
  if (order_max < 0 || order_max > 30) throw DomainError("monotone: order_max must be in [0, 30]");
  if (!(h > 0.0) || !std::isfinite(h)) throw DomainError("monotone: step h must be positive");
  std::vector<CheckReport> out;
  for (double x : xs) {
    require_x(x, "monotone");
    std::vector<EvalResult> f;
    for (int j = 0; j <= order_max; ++j) f.push_back(f_of_x(params, seq, x + j * h, tol));
    for (int k = 0; k <= order_max; ++k) {
      CompensatedSum<double> diff;
      double err = 0.0;
      double mag = 0.0;
      for (int j = 0; j <= k; ++j) {
        const double c = binomial(k, j);
        // (−1)^k Δ^k f(x) = Σ_j (−1)^j C(k,j) f(x + jh)
        diff.add(((j % 2) ? -c : c) * f[j].value);
        err += c * f[j].abs_error_bound;
        mag += c * std::fabs(f[j].value);
      }
      Grid g = describe_point(params, seq);
      g.emplace_back("x", x);
      g.emplace_back("h", h);
      g.emplace_back("k", k);
      CheckReport r = make_report("monotone", std::move(g), diff.value(), 0.0,
                                  err + (k + 2) * kU * mag);
      out.push_back(std::move(r));
    }
  }
  return out;
}

std::vector<CheckReport> check_log_convexity(const SeriesParams& params, const SequenceSpec& seq,
                                             const std::vector<std::pair<double, double>>& pairs,
                                             double lambda, double tol) {
  require_unit_argument(params, "logconvex");
  if (!(lambda >= 0.0 && lambda <= 1.0)) throw DomainError("logconvex: lambda must lie in [0, 1]");
  std::vector<CheckReport> out;
  for (const auto& [x1, x2] : pairs) {
    require_x(x1, "logconvex");
    require_x(x2, "logconvex");
    const EvalResult f1 = f_of_x(params, seq, x1, tol);
    const EvalResult f2 = f_of_x(params, seq, x2, tol);
    const EvalResult fm = f_of_x(params, seq, lambda * x1 + (1.0 - lambda) * x2, tol);
    const double lhs = lambda * std::log(f1.value) + (1.0 - lambda) * std::log(f2.value);
    const double rhs = std::log(fm.value);
    const double err = lambda * f1.abs_error_bound / f1.value +
                       (1.0 - lambda) * f2.abs_error_bound / f2.value +
                       fm.abs_error_bound / fm.value;
    Grid g = describe_point(params, seq);
    g.emplace_back("x1", x1);
    g.emplace_back("x2", x2);
    g.emplace_back("lambda", lambda);
    out.push_back(make_report("logconvex", std::move(g), lhs, rhs, err));
  }
  return out;
}

std::pair<CheckReport, CheckReport> check_chain_001(const SeriesParams& params,
                                                    const SequenceSpec& seq, double x1,
                                                    double x2, double tol) {
  require_unit_argument(params, "001");
  require_x(x1, "001");
  require_x(x2, "001");
  const EvalResult f1 = f_of_x(params, seq, x1, tol);
  const EvalResult f2 = f_of_x(params, seq, x2, tol);
  const EvalResult fm = f_of_x(params, seq, 0.5 * (x1 + x2), tol);
  const EvalResult fs = f_of_x(params, seq, x1 + x2, tol);
  const EvalResult zw = zeta_weight(params, seq, tol);
  const double prod = f1.value * f2.value;
  const double prod_err = f1.abs_error_bound * f2.value + f2.abs_error_bound * f1.value +
                          f1.abs_error_bound * f2.abs_error_bound;
  Grid g = describe_point(params, seq);
  g.emplace_back("x1", x1);
  g.emplace_back("x2", x2);

  Grid gl = g;
  gl.emplace_back("side", 0);
  CheckReport left = make_report(
      "001", std::move(gl), prod, fm.value * fm.value,
      prod_err + 2.0 * fm.value * fm.abs_error_bound + fm.abs_error_bound * fm.abs_error_bound);
  left.note = "f(x1) f(x2) >= f((x1+x2)/2)^2";

  Grid gr = g;
  gr.emplace_back("side", 1);
  const double upper = 2.0 * zw.value * fs.value;
  const double upper_err = 2.0 * (zw.abs_error_bound * fs.value + fs.abs_error_bound * zw.value +
                                  zw.abs_error_bound * fs.abs_error_bound);
  CheckReport right = make_report("001", std::move(gr), upper, prod, upper_err + prod_err);
  right.note = "2 zeta f(x1+x2) >= f(x1) f(x2)";
  return {std::move(left), std::move(right)};
}

CheckReport check_lower_bound_002(const SeriesParams& params, const SequenceSpec& seq,
                                  double tol) {
  require_unit_argument(params, "002");
  Grid g = describe_point(params, seq);
  g.emplace_back("r", params.r);
  return lower_bound_core("002", std::move(g), params, seq, tol);
}

CheckReport check_re1(double mu, double r, double tol) {
  if (!(mu > 1.0)) throw DomainError("re1: requires mu > 1");
  SeriesParams p;
  p.alpha = 2.0;
  p.beta = 1.0;
  p.mu = mu;
  p.nu = 1.0;
  p.r = r;
  p.z = 1.0;
  CheckReport rep = lower_bound_core("re1", {{"mu", mu}, {"r", r}}, p, PowerOfIndex{1.0}, tol);
  rep.note = "exponent ratio zeta(2mu+1)/zeta(2mu-1); zeta weights summed as series";
  return rep;
}

CheckReport check_zzkk(double mu, double nu, double r, double tol) {
  if (!(2.0 * mu - 3.0 > nu)) {
    throw DivergenceError("zzkk: S^(2,3) diverges", "2*mu - 3 > nu");
  }
  SeriesParams p;
  p.alpha = 2.0;
  p.mu = mu;
  p.nu = nu;
  p.r = r;
  p.z = 1.0;
  p.beta = 1.0;
  const EvalResult s1 = evaluate(p, PowerOfIndex{1.0}, tol);
  p.beta = 2.0;
  const EvalResult s2 = evaluate(p, PowerOfIndex{1.0}, tol);
  p.beta = 3.0;
  const EvalResult s3 = evaluate(p, PowerOfIndex{1.0}, tol);
  const double err = s1.abs_error_bound * s3.value + s3.abs_error_bound * s1.value +
                     s1.abs_error_bound * s3.abs_error_bound +
                     2.0 * s2.value * s2.abs_error_bound + s2.abs_error_bound * s2.abs_error_bound;
  return make_report("zzkk", {{"mu", mu}, {"nu", nu}, {"r", r}}, s1.value * s3.value,
                     s2.value * s2.value, err);
}

CheckReport check_wilkins(double r, double tol) {
  const EvalResult s2 = with_retry([&](double t) { return series::eval_S_mu(2.0, r, t); }, tol);
  const EvalResult s3 = with_retry([&](double t) { return series::eval_S_mu(3.0, r, t); }, tol);
  const double err = 2.0 * s2.value * s2.abs_error_bound +
                     s2.abs_error_bound * s2.abs_error_bound + 2.0 * s3.abs_error_bound;
  return make_report("wilkins", {{"r", r}}, s2.value * s2.value, 2.0 * s3.value, err);
}

CheckReport check_mm(double nu, double r, double tol) {
  if (!(nu >= 1.0)) throw DomainError("mm: requires nu >= 1");
  if (!(nu < 3.0)) {
    throw DivergenceError("mm: S^(2,1)_{2,nu} diverges", "4 - 1 > nu");
  }
  SeriesParams p;
  p.alpha = 2.0;
  p.beta = 1.0;
  p.mu = 2.0;
  p.nu = nu;
  p.r = r;
  p.z = 1.0;
  const EvalResult s21 = evaluate(p, PowerOfIndex{1.0}, tol);
  SeriesParams q = p;
  q.nu = 1.0;
  q.beta = 2.0;
  const EvalResult s22 = evaluate(q, PowerOfIndex{1.0}, tol);
  q.beta = 1.0;
  q.mu = 3.0;
  const EvalResult s31 = evaluate(q, PowerOfIndex{1.0}, tol);

  const double r2 = r * r;
  const double rhs = s22.value * s22.value + 2.0 * r2 * s31.value;
  const double rhs_err = 2.0 * s22.value * s22.abs_error_bound +
                         s22.abs_error_bound * s22.abs_error_bound + 2.0 * r2 * s31.abs_error_bound;
  const double s_lo = s21.value - s21.abs_error_bound;
  const double fixed = r2 * s_lo * s_lo;

  // Partial sums of the divergent operand S^{(2,3)}_{2,ν}; every term is
  // positive, so (partial sum − rounding) is a lower bound for it.
  SeriesParams d = p;
  d.beta = 3.0;
  const series::detail::TermModel model(d, PowerOfIndex{1.0});
  CompensatedSum<double> partial;
  double term_err = 0.0;
  constexpr std::int64_t kMaxTerms = std::int64_t{1} << 26;
  std::int64_t n = 0;
  std::int64_t next_check = 16;
  double lhs = 0.0;
  while (true) {
    const auto t = model.evaluate(++n);
    partial.add(t.value);
    term_err += t.value * t.rel_error;
    if (n == next_check || n == kMaxTerms) {
      next_check *= 2;
      const double lower = partial.value() - term_err - 2.0 * kU * partial.value();
      lhs = lower * s_lo + fixed;
      const double budget = kBudgetFactor * (rhs_err + 2.0 * kU * (lhs + rhs));
      if (lhs - rhs > budget || n == kMaxTerms) break;
    }
  }
  CheckReport rep = make_report("mm", {{"nu", nu}, {"r", r}}, lhs, rhs, rhs_err);
  std::ostringstream note;
  note << "S^(2,3)_{2,nu} diverges for nu >= 1; lhs is a certified lower bound from "
       << n << " terms";
  rep.note = note.str();
  return rep;
}

CheckReport check_turan(double alpha, double mu, double nu, double r, double tol) {
  EvalResult m;
  for (double t = tol;; t *= 10.0) {
    try {
      m = dist::make_distribution(alpha, mu, nu, r, t).turan_margin();
      break;
    } catch (const ConvergenceError&) {
      if (t >= tol * 1e5) throw;
    }
  }
  CheckReport rep;
  rep.check_id = "turan";
  rep.grid_point = {{"alpha", alpha}, {"mu", mu}, {"nu", nu}, {"r", r}};
  rep.lhs = m.value;
  rep.rhs = 0.0;
  rep.margin = m.value;
  rep.error_budget = kBudgetFactor * m.abs_error_bound;
  rep.verdict = classify(rep.margin, rep.error_budget);
  return rep;
}

}  // namespace mathieu::ineq
