#pragma once

#include "mathieu/eval_result.hpp"

namespace mathieu::specfun {

/// Parameters of E^{(τ)}_{β,ν,γ}(x) = Σ_k (τ)_k x^k / (k! [Γ(νk + γ)]^β).
struct MittagLefflerParams {
  double beta = 1.0;   // outer exponent
  double nu = 1.0;     // gamma step
  double gamma = 1.0;  // gamma offset
  double tau = 1.0;    // Pochhammer parameter

  void validate() const;
};

/// The β-Mittag-Leffler function; summed to full double precision.
EvalResult mittag_leffler(const MittagLefflerParams& params, double x);

}  // namespace mathieu::specfun
