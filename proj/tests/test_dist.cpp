#include <cmath>
#include <complex>
#include <numbers>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "mathieu/dist/distribution.hpp"
#include "mathieu/errors.hpp"
#include "support/expect.hpp"
#include "support/oracles.hpp"

using namespace mathieu;
using namespace mathieu::dist;
using oracle::Real;

namespace {

constexpr double kNorm = 0.3450817002977209000596049;   // α=2 μ=3 ν=1 r=1
constexpr double kMean = 1.459181764023060185798302;
constexpr double kVar = 1.332555583596905172254213;
constexpr double kTuran = 0.003577981789550445002881307;  // α=2 μ=4 ν=1 r=1
constexpr double kNorm332 = 2.147940804206099856975859;  // α=3 μ=3 ν=2 r=1/2
constexpr double kCfRe = 0.1399297938218747933957798;    // P^{(2,1)}_{2,1}, r=1, t=π/3
constexpr double kCfIm = 0.6809879430299347130125515;

struct Point {
  double alpha, mu, nu, r;
};

// Guard-passing points for the variance: αμ − α − 2 > ν.
const std::vector<Point> kMomentGrid = {
    {2, 3, 1, 1}, {2, 4, 1, 0.5}, {2, 4, 2, 1}, {2, 4, 3, 2},
    {3, 3, 1, 1}, {3, 3, 2, 0.5}, {3, 4, 3, 2}, {2, 5, 2, 1},
};

Real moment_oracle(const Point& p, int k) {
  return oracle::positive_sum([&](Real n) {
    return std::pow(n, k) * oracle::mathieu_term(n, p.alpha, p.alpha, p.mu, p.nu, p.r, 1);
  });
}

}  // namespace

TEST(Oracle, ReproducesFrozenConstants) {
  EXPECT_NEAR(static_cast<double>(oracle::mathieu_series(2, 2, 3, 1, 1, 1)), kNorm, 1e-12);
  EXPECT_NEAR(static_cast<double>(oracle::mathieu_series(3, 3, 3, 2, 0.5, 1)), kNorm332, 1e-12);
  const Point p{2, 3, 1, 1};
  const Real m0 = moment_oracle(p, 0);
  const Real m1 = moment_oracle(p, 1) / m0;
  EXPECT_NEAR(static_cast<double>(m1), kMean, 1e-12);
  EXPECT_NEAR(static_cast<double>(moment_oracle(p, 2) / m0 - m1 * m1), kVar, 1e-11);
  const Point q{2, 4, 1, 1};
  const Real a = moment_oracle(q, 0), b = moment_oracle(q, 1), c = moment_oracle(q, 2);
  EXPECT_NEAR(static_cast<double>(c * a - b * b), kTuran, 1e-12);
}

TEST(Distribution, Normalizer) {
  const auto d = make_distribution(2, 3, 1, 1, 1e-12);
  EXPECT_NEAR(d.normalizer(), kNorm, d.norm_error() + 1e-16);
  EXPECT_LE(d.norm_error(), 1e-12);
  const auto e = make_distribution(3, 3, 2, 0.5, 1e-12);
  EXPECT_NEAR(e.normalizer(), kNorm332, e.norm_error() + 1e-15);
}

TEST(Distribution, Guards) {
  EXPECT_THROW(make_distribution(2, 1.5, 1, 1, 1e-10), DivergenceError);
  EXPECT_THROW(make_distribution(2, 3, 1, 0, 1e-10), DomainError);
  EXPECT_THROW(make_distribution(2, 3, 1, 1, 0), DomainError);
  const auto d = make_distribution(2, 2, 1, 1, 1e-12);  // mean guard 4 − 3 > 1 fails
  EXPECT_THROW(d.mean(), DivergenceError);
  EXPECT_THROW(d.variance(), DivergenceError);
  EXPECT_THROW(d.turan_margin(), DivergenceError);
}

TEST(Pmf, ValuesAndSupport) {
  const auto d = make_distribution(2, 3, 1, 1, 1e-12);
  EXPECT_NEAR(d.pmf(1), 0.25 / kNorm, 1e-12);
  EXPECT_THROW(d.pmf(0), DomainError);
  EXPECT_THROW(d.pmf(-3), DomainError);
  for (std::int64_t n = 1; n <= 2000; n += 37) EXPECT_GT(d.pmf(n), 0.0);
}

TEST(Pmf, SumsToOneFromBelow) {
  for (const Point& p : kMomentGrid) {
    const auto d = make_distribution(p.alpha, p.mu, p.nu, p.r, 1e-12);
    double partial = 0.0;
    double previous = 0.0;
    const std::int64_t n_max = 40000;
    for (std::int64_t n = 1; n <= n_max; ++n) {
      partial += d.pmf(n);
      ASSERT_GE(partial, previous);
      previous = partial;
    }
    // Remainder beyond n_max from the oracle term.
    const Real tail = oracle::tail_integral(
        [&](Real x) {
          return oracle::mathieu_term(x, p.alpha, p.alpha, p.mu, p.nu, p.r, 1);
        },
        static_cast<Real>(n_max) + 0.5) / d.normalizer();
    EXPECT_LE(partial, 1.0 + 1e-12);
    EXPECT_NEAR(partial + static_cast<double>(tail), 1.0, 1e-10)
        << p.alpha << " " << p.mu << " " << p.nu << " " << p.r;
  }
}

TEST(Cdf, MatchesPartialSums) {
  const auto d = make_distribution(2, 3, 1, 1, 1e-12);
  double partial = 0.0;
  double last = 0.0;
  for (std::int64_t n = 1; n <= 500; ++n) {
    partial += d.pmf(n);
    EXPECT_NEAR(d.cdf(n), partial, 1e-14);
    EXPECT_GE(d.cdf(n), last);
    last = d.cdf(n);
  }
  EXPECT_EQ(d.cdf(0), 0.0);
}

TEST(Cdf, ConcurrentReadersAgree) {
  const auto d = make_distribution(2, 3, 1, 1, 1e-12);
  std::vector<double> seen(8);
  std::vector<std::thread> threads;
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&, i] {
      const MathieuDistribution copy = d;
      for (std::int64_t n = 1; n <= 3000; n += 1 + i) seen[i] = copy.cdf(n);
      seen[i] = copy.cdf(3000);
    });
  }
  for (auto& t : threads) t.join();
  for (double v : seen) EXPECT_EQ(v, seen[0]);
}

TEST(Moments, MatchBruteForce) {
  for (const Point& p : kMomentGrid) {
    const auto d = make_distribution(p.alpha, p.mu, p.nu, p.r, 1e-12);
    const Real m0 = moment_oracle(p, 0);
    const Real mean = moment_oracle(p, 1) / m0;
    const Real var = moment_oracle(p, 2) / m0 - mean * mean;
    const auto m = d.mean();
    const auto v = d.variance();
    EXPECT_NEAR(m.value, static_cast<double>(mean), 1e-9) << p.alpha << " " << p.mu;
    EXPECT_NEAR(v.value, static_cast<double>(var), 1e-9) << p.alpha << " " << p.mu;
    EXPECT_GE(v.value, -v.abs_error_bound);
  }
  const auto d = make_distribution(2, 3, 1, 1, 1e-12);
  EXPECT_TRUE(within_bound(d.mean(), kMean));
  EXPECT_TRUE(within_bound(d.variance(), kVar));
}

TEST(Turan, NonNegativeOnGrid) {
  int checked = 0;
  for (double alpha : {2.0, 3.0}) {
    for (double mu : {3.0, 4.0}) {
      for (double nu : {1.0, 2.0}) {
        for (double r : {0.5, 1.0, 2.0}) {
          if (!(alpha * mu - alpha - 2.0 > nu)) continue;
          const auto d = make_distribution(alpha, mu, nu, r, 1e-12);
          const auto t = d.turan_margin();
          EXPECT_GE(t.value, -t.abs_error_bound);
          // margin = variance · S²
          const auto v = d.variance();
          const double s2 = d.normalizer() * d.normalizer();
          EXPECT_NEAR(t.value, v.value * s2, v.abs_error_bound * s2 + t.abs_error_bound);
          ++checked;
        }
      }
    }
  }
  EXPECT_GE(checked, 20);
  const auto d = make_distribution(2, 4, 1, 1, 1e-12);
  EXPECT_TRUE(within_bound(d.turan_margin(), kTuran));
}

TEST(Charfn, ValuesAndSymmetry) {
  const auto d = make_distribution(DistributionParams{2, 1, 2, 1, 1}, 1e-12);
  const auto at0 = d.charfn(0.0, 1e-12);
  EXPECT_LE(std::abs(at0.value - 1.0), at0.abs_error_bound + 1e-16);
  const double t = std::numbers::pi / 3;
  const auto c = d.charfn(t, 1e-12);
  EXPECT_LE(std::abs(c.value - std::complex<double>(kCfRe, kCfIm)), c.abs_error_bound + 1e-16);
  const auto cm = d.charfn(-t, 1e-12);
  EXPECT_LE(std::abs(cm.value - std::conj(c.value)), c.abs_error_bound + cm.abs_error_bound);
  for (double s : {-7.0, -2.0, -0.5, 0.25, 1.0, 3.0, 2.0 * std::numbers::pi}) {
    const auto v = d.charfn(s, 1e-11);
    EXPECT_LE(std::abs(v.value), 1.0 + v.abs_error_bound);
  }
  EXPECT_THROW(d.charfn(NAN, 1e-10), DomainError);
}

TEST(Sample, DeterministicAndPositive) {
  const auto d = make_distribution(2, 3, 1, 1, 1e-12);
  const auto a = d.sample(1000, 7);
  const auto b = d.sample(1000, 7);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, d.sample(1000, 8));
  for (auto n : a) EXPECT_GE(n, 1);
  EXPECT_TRUE(d.sample(0, 1).empty());
}

TEST(Sample, EmpiricalMean) {
  const auto d = make_distribution(2, 4, 1, 1, 1e-12);
  const std::size_t count = 1'000'000;
  const auto draws = d.sample(count, 12345);
  double sum = 0.0;
  for (auto n : draws) sum += static_cast<double>(n);
  const double se = std::sqrt(d.variance().value / count);
  EXPECT_NEAR(sum / count, d.mean().value, 4.0 * se);
}
