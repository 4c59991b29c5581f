#pragma once

#include <functional>

#include "mathieu/eval_result.hpp"

namespace mathieu::quadrature {

using Integrand = std::function<double(double)>;

struct QuadratureSpec {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  int max_refinement_levels = 9;
  /// Boundary between the tanh-sinh part [0, s] and the exp-sinh part [s, ∞).
  double split_point = 1.0;
  /// When false a non-converged result is returned with its (too large)
  /// error estimate instead of raising ConvergenceError.
  bool throw_on_nonconvergence = true;

  void validate() const;
};

/// Behaviour of the integrand at the far end of a semi-infinite range.
struct TailDecay {
  enum class Kind { exponential, algebraic };
  Kind kind = Kind::exponential;
  /// Rate λ for e^{−λx}, or exponent k > 1 for x^{−k}.
  double rate = 1.0;

  static TailDecay exponential(double rate) { return {Kind::exponential, rate}; }
  static TailDecay algebraic(double k) { return {Kind::algebraic, k}; }
};

/// ∫_a^b f by tanh-sinh. `left_power` / `right_power` declare the endpoint
/// behaviour f ~ (x − a)^p, (b − x)^p with p > −1; the integrand is sampled
/// near both endpoints to catch a stronger singularity than declared.
/// Nodes closer to an endpoint than its spacing in x are dropped, so a
/// singular endpoint should sit at 0; elsewhere about |e|^{p+1} of the mass
/// near endpoint e is lost.
EvalResult integrate_finite(const Integrand& f, double a, double b,
                            const QuadratureSpec& spec, double left_power = 0.0,
                            double right_power = 0.0);

/// ∫_s^∞ f by exp-sinh; f must be regular at s.
EvalResult integrate_tail(const Integrand& f, double s, const QuadratureSpec& spec,
                          TailDecay decay);

/// ∫_0^∞ f as tanh-sinh on [0, split_point] plus exp-sinh beyond it.
EvalResult integrate_semi_infinite(const Integrand& f, const QuadratureSpec& spec,
                                   double left_power, TailDecay decay);

}  // namespace mathieu::quadrature
