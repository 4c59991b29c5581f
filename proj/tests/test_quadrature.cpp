#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "mathieu/errors.hpp"
#include "mathieu/quadrature/engine.hpp"
#include "mathieu/quadrature/representations.hpp"
#include "mathieu/series.hpp"
#include "support/expect.hpp"
#include "support/oracles.hpp"

using namespace mathieu;
using namespace mathieu::quadrature;
using oracle::Real;

namespace {

constexpr double kS1 = 0.7942335427593188655830136;        // Σ 2n/(n²+1)²
constexpr double kSHalf = 0.2998962141557099289430716;     // z = 1/2, r = 1
constexpr double kS32At1 = 1.801049470696251848601707;     // Σ 2n/(n²+1)^{3/2}
constexpr double kCfRe = 0.1399297938218747933957798;      // CF of 2n/(n²+1)², t = π/3
constexpr double kCfIm = 0.6809879430299347130125515;

series::SeriesParams point(double alpha, double beta, double mu, double nu, double r, double z) {
  series::SeriesParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.mu = mu;
  p.nu = nu;
  p.r = r;
  p.z = z;
  return p;
}

}  // namespace

TEST(Engine, ElementaryIntegrals) {
  QuadratureSpec spec;
  const auto e = integrate_semi_infinite([](double t) { return std::exp(-t); }, spec, 0.0,
                                         TailDecay::exponential(1.0));
  EXPECT_TRUE(within_bound(e, 1.0));
  const auto te = integrate_semi_infinite([](double t) { return t * std::exp(-t); }, spec, 1.0,
                                          TailDecay::exponential(1.0));
  EXPECT_TRUE(within_bound(te, 1.0));
  const auto alg = integrate_tail([](double t) { return 1.0 / (t * t * t); }, 2.0, spec,
                                  TailDecay::algebraic(3.0));
  EXPECT_TRUE(within_bound(alg, 0.125));
}

TEST(Engine, EndpointSingularityDeclared) {
  QuadratureSpec spec;
  const auto r = integrate_finite([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, spec, -0.5);
  EXPECT_TRUE(within_bound(r, 2.0));
  // B(1/2, 3/2) = π/2
  const auto beta = integrate_finite(
      [](double x) { return std::sqrt((1.0 - x) / x); }, 0.0, 1.0, spec, -0.5, 0.5);
  EXPECT_TRUE(within_bound(beta, std::numbers::pi / 2));
}

TEST(Engine, UndeclaredSingularityRejected) {
  QuadratureSpec spec;
  EXPECT_THROW(integrate_finite([](double x) { return std::pow(x, -0.7); }, 0.0, 1.0, spec),
               DomainError);
}

TEST(Engine, SpecValidation) {
  QuadratureSpec spec;
  spec.max_refinement_levels = 2;
  EXPECT_THROW(spec.validate(), DomainError);
  spec = {};
  spec.rel_tol = 0.0;
  EXPECT_THROW(spec.validate(), DomainError);
}

TEST(Engine, MathieuIntegrandEqualsSeries) {
  const auto r = integrate_semi_infinite([](double t) { return t * std::sin(t) / std::expm1(t); },
                                         QuadratureSpec{}, 2.0, TailDecay::exponential(1.0));
  EXPECT_TRUE(within_bound(r, kS1));
}

TEST(ClassicalIntegral, MatchesBruteForceSeries) {
  for (double r : {0.5, 1.0, 2.0, 5.0}) {
    const Real ref = oracle::positive_sum([r](Real n) { return 2 * n / ((n * n + r * r) * (n * n + r * r)); });
    const auto q = eval_classical_integral(r, QuadratureSpec{});
    EXPECT_NEAR(q.value, static_cast<double>(ref), q.abs_error_bound + 1e-15) << r;
  }
  EXPECT_NEAR(static_cast<double>(oracle::positive_sum([](Real n) { return 2 * n / ((n * n + 1) * (n * n + 1)); })),
              kS1, 1e-16);
}

TEST(ClassicalIntegral, ZeroLimitIsTwoZeta3) {
  const auto q = eval_classical_integral(0.0, QuadratureSpec{});
  EXPECT_TRUE(within_bound(q, 2.0 * 1.202056903159594285399738));
}

TEST(Theorem1, HalfArgumentPoint) {
  const auto p = point(2, 1, 2, 1, 1, 0.5);
  const Real ref = oracle::mathieu_series(2, 1, 2, 1, 1, 0.5L);
  EXPECT_NEAR(static_cast<double>(ref), kSHalf, 1e-16);
  const auto q = eval_theorem1(p, {1.0}, QuadratureSpec{});
  EXPECT_TRUE(within_bound(q, kSHalf));
  EXPECT_LE(q.abs_error_bound, 1e-8);
}

TEST(Theorem1, ZeroRCollapsesKernel) {
  const auto p = point(2, 1, 2, 1, 0, 0.5);
  const auto q = eval_theorem1(p, {1.0}, QuadratureSpec{});
  const auto s = series::eval_series(p, series::PowerOfIndex{1.0}, 1e-13);
  EXPECT_NEAR(q.value, s.value, q.abs_error_bound + s.abs_error_bound);
}

TEST(Theorem1, AlternatingPointMatchesOracle) {
  const auto p = point(2, 1, 2, 1, 1, -1);
  const double ref = static_cast<double>(oracle::mathieu_series(2, 1, 2, 1, 1, -1));
  EXPECT_TRUE(within_bound(eval_remark1(p, {1.0}, QuadratureSpec{}), ref));
  EXPECT_TRUE(within_bound(series::eval_S_tilde(p, series::PowerOfIndex{1.0}, 1e-12), ref));
}

TEST(Theorem1, Remark2ExponentialArgument) {
  const double x = 1.0;
  auto p = point(2, 1, 2, 1.5, 2, std::exp(-x));
  const double ref = static_cast<double>(oracle::mathieu_series(2, 1, 2, 1.5L, 2, std::exp(-1.0L)));
  EXPECT_TRUE(within_bound(eval_remark2(p, x, {1.0}, QuadratureSpec{}), ref));
}

TEST(Theorem1, PrintedFormShiftsBeta) {
  // t^{c−1} with lower parameter c evaluates the series at β + 1/γ.
  const auto p = point(2, 1, 2.5, 1, 1, 0.5);
  const auto printed = eval_theorem1(p, {1.0}, QuadratureSpec{}, KernelForm::printed);
  const double shifted = static_cast<double>(oracle::mathieu_series(2, 2, 2.5L, 1, 1, 0.5L));
  EXPECT_TRUE(within_bound(printed, shifted));
  const double plain = static_cast<double>(oracle::mathieu_series(2, 1, 2.5L, 1, 1, 0.5L));
  EXPECT_GT(std::fabs(printed.value - plain), 1e-3);
}

TEST(Theorem1, DivergentPointRejected) {
  EXPECT_THROW(eval_theorem1(point(2, 1, 1, 1, 1, 1), {1.0}, QuadratureSpec{}), DivergenceError);
}

TEST(Remark3, OneF2Kernel) {
  const auto q = eval_remark3(2, point(2, 1, 2, 1, 1, 0.5), QuadratureSpec{});
  EXPECT_TRUE(within_bound(q, kSHalf));
}

TEST(Remark3, ZeroF1KernelAtBetaZero) {
  const double ref = static_cast<double>(oracle::mathieu_series(2, 0, 2, 1, 1, 0.5L));
  EXPECT_TRUE(within_bound(eval_remark3(2, point(2, 0, 2, 1, 1, 0.5), QuadratureSpec{}), ref));
  const double ref1 = static_cast<double>(oracle::mathieu_series(2, 0, 2, 1, 1, 1));
  EXPECT_TRUE(within_bound(eval_remark3(2, point(2, 0, 2, 1, 1, 1), QuadratureSpec{}), ref1));
}

TEST(Remark3, HigherOrderKernel) {
  // q = 3, α = 3: a_n = n.
  const double ref = static_cast<double>(oracle::mathieu_series(3, 1, 2, 1, 0.7L, 0.5L));
  EXPECT_TRUE(within_bound(eval_remark3(3, point(3, 1, 2, 1, 0.7, 0.5), QuadratureSpec{}), ref));
}

TEST(Theorem2, CorrectedKernelMatchesSeries) {
  const auto q = eval_theorem2(2, 1, {1.0}, 1.0, QuadratureSpec{});
  EXPECT_TRUE(within_bound(q, kS32At1));
  const Real ref = oracle::positive_sum([](Real n) { return 2 * n / std::pow(n * n + 1, 1.5L); }, 400000);
  EXPECT_NEAR(static_cast<double>(ref), kS32At1, 1e-15);
}

TEST(Theorem2, ZeroLimit) {
  const double pi = std::numbers::pi;
  EXPECT_TRUE(within_bound(eval_theorem2(2, 1, {1.0}, 0.0, QuadratureSpec{}), pi * pi / 3));
}

TEST(Theorem2, PrintedKernelIsNotIntegrable) {
  EXPECT_THROW(eval_theorem2(2, 1, {1.0}, 1.0, QuadratureSpec{}, KernelForm::printed),
               DivergenceError);
  // The printed integrand tends to Σ 2 n^{β−3α/2} = π²/3 instead of 0.
  const double v = theorem2_integrand(2, 1, {1.0}, 1.0, 1e3, KernelForm::printed);
  const double pi = std::numbers::pi;
  EXPECT_GT(v, 1e-6);
  EXPECT_NEAR(v, pi * pi / 3, 1e-4);
  EXPECT_LT(std::fabs(theorem2_integrand(2, 1, {1.0}, 1.0, 1e3, KernelForm::corrected)), 1e-5);
}

TEST(CharfnIntegral, OriginAndSymmetry) {
  const auto one = eval_charfn_integral(1.0, 1.0, 1.0, 0.0, QuadratureSpec{});
  EXPECT_NEAR(one.value.real(), 1.0, one.abs_error_bound + 1e-15);
  EXPECT_NEAR(one.value.imag(), 0.0, one.abs_error_bound + 1e-15);
  const auto plus = eval_charfn_integral(2.0, 1.0, 0.5, 0.7, QuadratureSpec{});
  const auto minus = eval_charfn_integral(2.0, 1.0, 0.5, -0.7, QuadratureSpec{});
  const double b = plus.abs_error_bound + minus.abs_error_bound;
  EXPECT_NEAR(plus.value.real(), minus.value.real(), b);
  EXPECT_NEAR(plus.value.imag(), -minus.value.imag(), b);
}

TEST(CharfnIntegral, MatchesDirectSum) {
  const double t = std::numbers::pi / 3;
  const auto w = [](Real n) { return 2 * n / ((n * n + 1) * (n * n + 1)); };
  const auto osc = oracle::oscillating_sum(w, t);
  const Real norm = oracle::positive_sum(w);
  EXPECT_NEAR(static_cast<double>(osc.real() / norm), kCfRe, 1e-15);
  EXPECT_NEAR(static_cast<double>(osc.imag() / norm), kCfIm, 1e-15);
  const auto q = eval_charfn_integral(1.0, 1.0, 1.0, t, QuadratureSpec{});
  EXPECT_LE(std::abs(q.value - std::complex<double>(kCfRe, kCfIm)), q.abs_error_bound + 1e-16);
}
