#pragma once

#include <string>

#include "mathieu/eval_result.hpp"
#include "mathieu/series/params.hpp"

namespace mathieu::series {

enum class Verdict { converges, diverges, unknown };

struct ConvergenceReport {
  Verdict verdict = Verdict::unknown;
  /// p such that the terms behave like n^{−p} on |z| = 1 (power-type
  /// sequences), or the exponent of Γ in the term for GammaArithmetic.
  double decay_exponent = 0.0;
  /// The condition that decides convergence, e.g. "gamma*(mu*alpha-beta) > nu".
  std::string guard;
};

ConvergenceReport check_convergence(const SeriesParams& params,
                                    const SequenceSpec& seq);

/// Direct summation with a certified remainder; abs_error_bound ≤ tol.
/// Throws DivergenceError when check_convergence does not report convergence
/// and ConvergenceError when tol cannot be met.
EvalResult eval_series(const SeriesParams& params, const SequenceSpec& seq,
                       double tol);

/// S(r) = Σ 2n / (n² + r²)².
EvalResult eval_S(double r, double tol);

/// S_μ(r) = Σ 2n / (n² + r²)^μ, μ > 1.
EvalResult eval_S_mu(double mu, double r, double tol);

/// The alternating companion: eval_series at z = −1.
EvalResult eval_S_tilde(SeriesParams params, const SequenceSpec& seq,
                        double tol);

}  // namespace mathieu::series
