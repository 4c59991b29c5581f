#pragma once

namespace mathieu::specfun {

/// Bessel function of the first kind J_ν(x) for real order ν ≥ −1/2 and
/// x ≥ 0. Ascending series (113-bit accumulation) for moderate x, Hankel
/// asymptotic expansion for large x.
double bessel_j(double order, double x);

}  // namespace mathieu::specfun
