#pragma once

namespace mathieu::specfun {

/// Riemann zeta ζ(p) for real p > 1, absolute error below 1e-14.
double riemann_zeta(double p);

}  // namespace mathieu::specfun
