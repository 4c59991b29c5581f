#include "mathieu/quadrature/engine.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "mathieu/compensated.hpp"
#include "mathieu/errors.hpp"

namespace mathieu::quadrature {

namespace {

constexpr double kEps = 2.220446049250313e-16;
constexpr double kHalfPi = std::numbers::pi / 2.0;

struct Node {
  double x = 0.0;
  double w = 0.0;
  bool valid = false;
};

// Runs the level-halving trapezoidal scheme in u for a node map u -> (x, w).
template <typename NodeMap>
EvalResult run_levels(const Integrand& f, NodeMap&& node, double u_lo,
                      double u_hi, const QuadratureSpec& spec,
                      const char* method) {
  CompensatedSum<double> total;
  std::int64_t evaluations = 0;
  auto visit = [&](double u) {
    const Node n = node(u);
    if (!n.valid || n.w == 0.0) return;
    const double fx = f(n.x);
    ++evaluations;
    if (!std::isfinite(fx)) {
      std::ostringstream msg;
      msg << method << ": integrand not finite at x = " << n.x;
      throw DomainError(msg.str());
    }
    total.add(n.w * fx);
  };

  double h = 0.5;
  for (double u = 0.0; u <= u_hi; u += h) visit(u);
  for (double u = -h; u >= u_lo; u -= h) visit(u);
  double previous = h * total.value();
  double estimate = INFINITY;
  double value = previous;
  for (int level = 1; level < spec.max_refinement_levels; ++level) {
    h /= 2.0;
    for (double u = h; u <= u_hi; u += 2.0 * h) visit(u);
    for (double u = -h; u >= u_lo; u -= 2.0 * h) visit(u);
    value = h * total.value();
    estimate = std::fabs(value - previous) + 4.0 * kEps * h * total.abs_sum();
    previous = value;
    if (level >= 2 &&
        estimate <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(value))) {
      break;
    }
  }
  if (!(estimate <= std::max(spec.abs_tol, spec.rel_tol * std::fabs(value))) &&
      spec.throw_on_nonconvergence) {
    std::ostringstream msg;
    msg << method << ": no convergence after " << spec.max_refinement_levels
        << " levels (estimate " << estimate << ")";
    throw ConvergenceError(msg.str(), estimate);
  }
  EvalResult r;
  r.value = value;
  r.abs_error_bound = estimate;
  r.terms_used = evaluations;
  r.method = method;
  return r;
}

// Range of u beyond which a tanh-sinh endpoint with f ~ d^p contributes
// nothing at double precision: the innermost node sits at distance
// len·e^{−v2} ≤ e^{−50/(p+1)}.
double tanh_sinh_extent(double power, double len) {
  const double v2 = std::min(50.0 / (power + 1.0) + std::max(0.0, std::log(len)), 690.0);
  return std::asinh(v2 / std::numbers::pi);
}

void check_endpoint(const Integrand& f, double a, double len, double sign,
                    double declared) {
  const double d1 = 1e-6 * len;
  const double d2 = 1e-9 * len;
  const double f1 = f(a + sign * d1);
  const double f2 = f(a + sign * d2);
  if (!std::isfinite(f1) || !std::isfinite(f2)) {
    throw DomainError("integrand not finite near endpoint " + std::to_string(a));
  }
  if (f1 == 0.0 || f2 == 0.0) return;
  const double observed = std::log(std::fabs(f2 / f1)) / std::log(d2 / d1);
  if (observed < declared - 0.3 && observed < 0.0) {
    std::ostringstream msg;
    msg << "integrand behaves like d^" << observed << " at endpoint " << a
        << ", stronger than the declared d^" << declared;
    throw DomainError(msg.str());
  }
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw DomainError("QuadratureSpec: tolerances must be positive");
  }
  if (max_refinement_levels < 3) {
    throw DomainError("QuadratureSpec: max_refinement_levels must be >= 3");
  }
  if (!(split_point > 0.0)) {
    throw DomainError("QuadratureSpec: split_point must be positive");
  }
}

EvalResult integrate_finite(const Integrand& f, double a, double b,
                            const QuadratureSpec& spec, double left_power,
                            double right_power) {
  spec.validate();
  if (!(b > a)) throw DomainError("integrate_finite: requires a < b");
  if (!(left_power > -1.0) || !(right_power > -1.0)) {
    throw DomainError("integrate_finite: endpoint powers must exceed -1");
  }
  const double len = b - a;
  check_endpoint(f, a, len, 1.0, left_power);
  check_endpoint(f, b, len, -1.0, right_power);

  const double half = len / 2.0;
  auto node = [&](double u) {
    const double v = kHalfPi * std::sinh(u);
    const double e = std::exp(-2.0 * std::fabs(v));  // in (0, 1]
    Node n;
    const double d = 2.0 * half * e / (1.0 + e);     // distance to nearer end
    if (d == 0.0) return n;
    n.x = (u < 0.0) ? a + d : b - d;
    if (!(n.x > a && n.x < b)) return n;
    n.w = half * kHalfPi * std::cosh(u) * 4.0 * e / ((1.0 + e) * (1.0 + e));
    n.valid = true;
    return n;
  };
  return run_levels(f, node, -tanh_sinh_extent(left_power, len),
                    tanh_sinh_extent(right_power, len), spec, "tanh-sinh");
}

EvalResult integrate_tail(const Integrand& f, double s,
                          const QuadratureSpec& spec, TailDecay decay) {
  spec.validate();
  if (!(decay.rate > 0.0)) throw DomainError("integrate_tail: invalid decay");
  double v_hi = 0.0;
  if (decay.kind == TailDecay::Kind::exponential) {
    v_hi = std::log(80.0 / decay.rate + 1.0);
  } else {
    if (!(decay.rate > 1.0)) {
      throw DomainError("integrate_tail: algebraic decay exponent must exceed 1");
    }
    v_hi = std::min(40.0 * std::numbers::ln10 / (decay.rate - 1.0), 690.0);
  }
  const double u_hi = std::asinh(v_hi / kHalfPi);
  const double u_lo = -std::asinh(50.0 / kHalfPi);
  auto node = [&](double u) {
    const double v = kHalfPi * std::sinh(u);
    const double e = std::exp(v);
    Node n;
    n.x = s + e;
    if (!(n.x > s) || !std::isfinite(n.x)) return n;
    n.w = kHalfPi * std::cosh(u) * e;
    n.valid = true;
    return n;
  };
  return run_levels(f, node, u_lo, u_hi, spec, "exp-sinh");
}

EvalResult integrate_semi_infinite(const Integrand& f, const QuadratureSpec& spec,
                                   double left_power, TailDecay decay) {
  spec.validate();
  const EvalResult head =
      integrate_finite(f, 0.0, spec.split_point, spec, left_power, 0.0);
  const EvalResult tail = integrate_tail(f, spec.split_point, spec, decay);
  EvalResult r;
  r.value = head.value + tail.value;
  r.abs_error_bound = head.abs_error_bound + tail.abs_error_bound;
  r.terms_used = head.terms_used + tail.terms_used;
  r.method = "tanh-sinh+exp-sinh";
  return r;
}

}  // namespace mathieu::quadrature
