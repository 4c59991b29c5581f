#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mathieu/eval_result.hpp"
#include "mathieu/series/params.hpp"

namespace mathieu::ineq {

enum class Verdict { pass, fail, inconclusive };

const char* to_string(Verdict v);

struct CheckReport {
  std::string check_id;
  std::vector<std::pair<std::string, double>> grid_point;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // oriented so that margin ≥ 0 means the claim holds
  double error_budget = 0.0;
  Verdict verdict = Verdict::inconclusive;
  std::string note;
};

/// Classifies margin against error_budget: fail below −budget, inconclusive
/// within ±budget, pass above.
Verdict classify(double margin, double error_budget);

/// Safety factor applied to the summed operand error bounds.
inline constexpr double kBudgetFactor = 4.0;

/// Default accuracy requested from every series evaluation.
inline constexpr double kDefaultTolerance = 1e-13;

/// ζ_{μ,ν}(α,β,z) = Σ (ν)_n zⁿ / (n! a_n^{αμ−β}), i.e. S at r = 0 halved.
EvalResult zeta_weight(const series::SeriesParams& params,
                       const series::SequenceSpec& seq, double tol);

/// f(x) = S(√x): (−1)^k Δ_h^k f(x) ≥ 0 for k = 0..order_max at each x.
std::vector<CheckReport> check_complete_monotonicity(
    const series::SeriesParams& params, const series::SequenceSpec& seq,
    int order_max, const std::vector<double>& xs, double h,
    double tol = kDefaultTolerance);

/// λ log f(x₁) + (1−λ) log f(x₂) − log f(λx₁ + (1−λ)x₂) ≥ 0, f(x) = S(√x).
std::vector<CheckReport> check_log_convexity(
    const series::SeriesParams& params, const series::SequenceSpec& seq,
    const std::vector<std::pair<double, double>>& pairs, double lambda,
    double tol = kDefaultTolerance);

/// [f((x₁+x₂)/2)]² ≤ f(x₁) f(x₂) ≤ 2ζ_{μ,ν} f(x₁ + x₂), f(x) = S(√x).
std::pair<CheckReport, CheckReport> check_chain_001(
    const series::SeriesParams& params, const series::SequenceSpec& seq,
    double x1, double x2, double tol = kDefaultTolerance);

/// 2ζ_{μ,ν} exp(−μ r² ζ_{μ+1,ν}/ζ_{μ,ν}) ≤ S_{μ,ν}^{(α,β)}(r).
CheckReport check_lower_bound_002(const series::SeriesParams& params,
                                  const series::SequenceSpec& seq,
                                  double tol = kDefaultTolerance);

/// 2ζ(2μ−1) exp(−μ r² ζ(2μ+1)/ζ(2μ−1)) ≤ S_μ(r): the (α,β,ν,z) = (2,1,1,1),
/// a_n = n instance of check_lower_bound_002, evaluated by the same code.
CheckReport check_re1(double mu, double r, double tol = kDefaultTolerance);

/// S^{(2,1)}_{μ,ν} S^{(2,3)}_{μ,ν} ≥ [S^{(2,2)}_{μ,ν}]²; guard 2μ − 3 > ν.
CheckReport check_zzkk(double mu, double nu, double r,
                       double tol = kDefaultTolerance);

/// [S₂(r)]² ≥ 2 S₃(r).
CheckReport check_wilkins(double r, double tol = kDefaultTolerance);

/// S^{(2,3)}_{2,ν} S^{(2,1)}_{2,ν} + r² [S^{(2,1)}_{2,ν}]² ≥
///   [S^{(2,2)}_{2,1}]² + 2r² S^{(2,1)}_{3,1}, for 1 ≤ ν < 3.
/// S^{(2,3)}_{2,ν} has terms of order n^{ν−2} and diverges for ν ≥ 1, so the
/// left side is replaced by a certified lower bound built from a partial sum
/// long enough to exceed the right side.
CheckReport check_mm(double nu, double r, double tol = kDefaultTolerance);

/// S^{(α,α+2)} S^{(α,α)} − [S^{(α,α+1)}]² ≥ 0 for the Mathieu distribution.
CheckReport check_turan(double alpha, double mu, double nu, double r,
                        double tol = kDefaultTolerance);

}  // namespace mathieu::ineq
