#pragma once

#include "mathieu/eval_result.hpp"
#include "mathieu/quadrature/engine.hpp"
#include "mathieu/series/params.hpp"

namespace mathieu::quadrature {

/// Which form of an integral representation to evaluate. `printed` keeps the
/// formula exactly as usually quoted and exists for diagnostics only.
enum class KernelForm { corrected, printed };

/// S(r) = (1/r) ∫_0^∞ t sin(rt) / (e^t − 1) dt; at r = 0 the limit
/// ∫ t² / (e^t − 1) dt = 2ζ(3).
EvalResult eval_classical_integral(double r, const QuadratureSpec& spec);

/// Fox-Wright representation for a_n = n^γ, c = γ(μα − β):
///   S = (2νz / Γ(μ)) ∫_0^∞ t^c e^{−t} (1 − z e^{−t})^{−ν−1}
///         ₁Ψ₁[(μ, 1); (c + 1, γα); −r² t^{γα}] dt.
/// The printed variant uses t^{c−1} and lower parameter (c, γα); it equals
/// the series with β replaced by β + 1/γ.
/// The integral is cut at a point T where the integrand is negligible or the
/// kernel can no longer be resolved; the contribution beyond T is estimated
/// from the last samples and added to the error bound.
EvalResult eval_theorem1(const series::SeriesParams& params,
                         const series::PowerOfIndex& seq,
                         const QuadratureSpec& spec,
                         KernelForm form = KernelForm::corrected);

/// eval_theorem1 restricted to z = 1 or z = −1.
EvalResult eval_remark1(const series::SeriesParams& params,
                        const series::PowerOfIndex& seq,
                        const QuadratureSpec& spec);

/// eval_theorem1 at z = e^{−x}, x > 0.
EvalResult eval_remark2(series::SeriesParams params, double x,
                        const series::PowerOfIndex& seq,
                        const QuadratureSpec& spec);

/// Hypergeometric-kernel representation for a_n = n^{q/α}, c = q(μ − β/α):
///   S = (2νz / Γ(c+1)) ∫_0^∞ t^c e^{−t} (1 − z e^{−t})^{−ν−1}
///         ₁F_q(μ; Δ(q; c+1); −r² (t/q)^q) dt.
/// For q = 2 and β = 0 the ₀F₁ form
///   S = (2 / Γ(2μ)) ∫_0^∞ t^{2μ−1} ₀F₁(; μ+½; −r²t²/4) [(1 − z e^{−t})^{−ν} − 1] dt
/// is used. `params.alpha` is only used to define the sequence and β/α.
EvalResult eval_remark3(int q, const series::SeriesParams& params,
                        const QuadratureSpec& spec);

/// S^{(α,β)}_{3/2,1}(r; a, 1) = (2/π) ∫_1^∞ t/√(t²−1) f_r(t) dt with
///   f_r(t) = Σ 2(a_n^α t² − r²) / (a_n^{α/2−β} (a_n^α t² + r²)²).
/// Requests for the printed kernel t√(t²−1) raise DivergenceError.
EvalResult eval_theorem2(double alpha, double beta,
                         const series::PowerOfIndex& seq, double r,
                         const QuadratureSpec& spec,
                         KernelForm form = KernelForm::corrected);

/// The integrand of eval_theorem2 at t > 1 in either form.
double theorem2_integrand(double alpha, double beta,
                          const series::PowerOfIndex& seq, double r, double t,
                          KernelForm form);

/// Characteristic function of P^{(2,1)}_{μ+1,ν} through
///   √π / ((2r)^{μ−½} Γ(μ+1) S) ∫_0^∞ u^{μ+½} J_{μ−½}(ru) [(1 − e^{it−u})^{−ν} − 1] du,
/// S = S^{(2,1)}_{μ+1,ν}(r). Real and imaginary parts are integrated
/// separately.
ComplexEvalResult eval_charfn_integral(double mu, double nu, double r, double t,
                                       const QuadratureSpec& spec);

}  // namespace mathieu::quadrature
