#include "mathieu/specfun/mittag_leffler.hpp"

#include <cmath>
#include <sstream>

#include "mathieu/errors.hpp"
#include "mathieu/specfun/gamma.hpp"
#include "mathieu/specfun/hypergeometric.hpp"
#include "series_engine.hpp"

namespace mathieu::specfun {

void MittagLefflerParams::validate() const {
  if (!(beta > 0.0) || !(nu > 0.0) || !(gamma > 0.0) || !(tau > 0.0)) {
    throw DomainError("mittag_leffler: beta, nu, gamma and tau must be positive");
  }
}

EvalResult mittag_leffler(const MittagLefflerParams& p, double x) {
  p.validate();
  const double t0 = std::exp(-p.beta * log_abs_gamma(p.gamma));
  auto next = [&](std::int64_t k, double t) {
    const double kk = static_cast<double>(k);
    const double lr = log_gamma_ratio(kk * p.nu + p.gamma, p.nu, 0.0);
    return detail::Step<double>{
        t * (p.tau + kk) * x / (kk + 1.0) * std::exp(-p.beta * lr), x == 0.0};
  };
  detail::SeriesControl c;
  c.min_terms = 3;
  while (c.min_terms * p.nu + p.gamma < 2.0 || c.min_terms < p.tau) {
    ++c.min_terms;
  }
  c.term_error_factor = 8.0 * (1.0 + p.beta);
  const auto out = detail::sum_series(t0, next, c);
  const double ratio = out.cancellation();
  if (ratio > kCancellationLimit) {
    std::ostringstream msg;
    msg << "mittag_leffler: cancellation ratio " << ratio;
    throw PrecisionError(msg.str(), ratio);
  }
  EvalResult r;
  r.value = out.sum;
  r.abs_error_bound = out.abs_error;
  r.terms_used = out.terms;
  r.method = "mittag-leffler-series";
  return r;
}

}  // namespace mathieu::specfun
