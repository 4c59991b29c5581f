#pragma once

#include "mathieu/eval_result.hpp"
#include "mathieu/series/params.hpp"

namespace mathieu::series {

/// Evaluation through the binomial expansion in r² over β-Mittag-Leffler
/// functions, for a_n = Γ(γn + δ):
///   S = 2 Σ_m C(μ+m−1, m) (−r²)^m [E^{(ν)}_{(μ+m)α−β, γ, δ}(z) − Γ(δ)^{−((μ+m)α−β)}].
/// For ν = 1 the shifted form 2z Σ_m C(μ+m−1, m)(−r²)^m E_{(μ+m)α−β, γ, γ+δ}(z)
/// is used instead. Requires r² < (min_n a_n)^α so that the outer series
/// converges; at most m_max + 1 outer terms are used.
EvalResult eval_via_mittag_leffler(const SeriesParams& params,
                                   const GammaArithmetic& seq, int m_max,
                                   double tol);

struct PhiStarDifference {
  EvalResult result;
  /// Imaginary part left over after combining the two conjugate terms.
  double imag_residual = 0.0;
};

/// S_{2,ν}^{(2,1)}(r, {n}; z) = (Φ*_ν(z, 2, −ir) − Φ*_ν(z, 2, ir)) / (2ir)
/// for |z| < 1, r > 0. The two transcendents are summed independently.
PhiStarDifference eval_phi_star_difference(double nu, double r, double z,
                                           double tol);

}  // namespace mathieu::series
