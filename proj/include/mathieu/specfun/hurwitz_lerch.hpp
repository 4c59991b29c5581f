#pragma once

#include <complex>

#include "mathieu/eval_result.hpp"

namespace mathieu::specfun {

/// Φ*_ν(z, s, a) = Σ_{n≥0} (ν)_n / n! · zⁿ / (n + a)^s for |z| ≤ 1.
///
/// Divergent combinations (|z| = 1 with s − ν ≤ 1) are rejected with a
/// DivergenceError before any summation. `tol` bounds the truncation error;
/// the reported abs_error_bound adds the rounding error on top.
ComplexEvalResult hurwitz_lerch_phi_star(std::complex<double> z, double s,
                                         std::complex<double> a, double nu,
                                         double tol = 1e-15);

}  // namespace mathieu::specfun
