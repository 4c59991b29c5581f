#pragma once

#include <vector>

#include "mathieu/eval_result.hpp"

namespace mathieu::specfun {

/// Largest tolerated ratio between the biggest series term and the result
/// before a double-precision sum is declared meaningless.
inline constexpr double kCancellationLimit = 1e12;

/// Same limit for the 113-bit evaluation path.
inline constexpr double kExtendedCancellationLimit = 1e28;

/// Parameters of the Fox-Wright function 1Ψ1[(a, A); (b, B); x].
struct FoxWright11Params {
  double a = 1.0;
  double A = 1.0;
  double b = 1.0;
  double B = 1.0;

  /// Throws DomainError unless A > 0, B > 0 and 1 + B − A > 0.
  void validate() const;
};

/// Σ_{n≥0} Γ(a + nA) / Γ(b + nB) · xⁿ / n!.
///
/// Summed with compensated accumulation. For alternating sums the reported
/// error bound grows with the cancellation ratio (largest term over result);
/// once that ratio exceeds kCancellationLimit a PrecisionError is thrown
/// instead of returning a value with no correct digits.
EvalResult fox_wright_11(const FoxWright11Params& params, double x);

/// What the extended sums do once cancellation passes their limit: `strict`
/// throws PrecisionError, `widen` returns the value with a bound that carries
/// the whole rounding loss. The latter suits callers that need absolute
/// accuracy only, e.g. near a zero of the function.
enum class Cancellation { strict, widen };

/// As fox_wright_11 but accumulated in 113-bit binary floating point; the
/// precision limit is kExtendedCancellationLimit.
EvalResult fox_wright_11_extended(const FoxWright11Params& params, double x,
                                  Cancellation mode = Cancellation::strict);

/// Parameter lists of pFq. Denominator entries may not be 0, −1, −2, ...
struct HypergeometricParams {
  std::vector<double> numerator;
  std::vector<double> denominator;

  /// Δ(q; λ) = λ/q, (λ+1)/q, ..., (λ+q−1)/q.
  static std::vector<double> delta(int q, double lambda);

  void validate() const;
};

/// Σ_{n≥0} ∏(num)_n / ∏(den)_n · xⁿ / n! for p ≤ q. Same precision contract
/// as fox_wright_11.
EvalResult hypergeometric_pfq(const HypergeometricParams& params, double x);

EvalResult hypergeometric_pfq_extended(const HypergeometricParams& params,
                                       double x,
                                       Cancellation mode = Cancellation::strict);

}  // namespace mathieu::specfun
