#include "mathieu/specfun/zeta.hpp"

#include <cmath>

#include "mathieu/errors.hpp"

namespace mathieu::specfun {

namespace {

// B_{2k} / (2k)! for k = 1..10.
constexpr double kBernoulliOverFactorial[] = {
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
};

constexpr int kHead = 12;

}  // namespace

// Euler–Maclaurin: Σ_{n<N} n^{−p} + N^{1−p}/(p−1) + N^{−p}/2
//   + Σ_k B_{2k}/(2k)! · p(p+1)···(p+2k−2) · N^{−p−2k+1}.
double riemann_zeta(double p) {
  if (!(p > 1.0)) throw DomainError("riemann_zeta: requires p > 1");
  if (p > 64.0) return 1.0 + std::pow(2.0, -p) + std::pow(3.0, -p);

  double head = 0.0;
  for (int n = kHead - 1; n >= 1; --n) head += std::pow(n, -p);

  const double N = kHead;
  const double n_p = std::pow(N, -p);
  double tail = N * n_p / (p - 1.0) + 0.5 * n_p;

  double rising = p;          // p(p+1)···(p+2k−2)
  double power = n_p / N;     // N^{−p−2k+1}
  for (int k = 0; k < 10; ++k) {
    const double term = kBernoulliOverFactorial[k] * rising * power;
    tail += term;
    if (std::fabs(term) < 1e-18 * tail) break;
    rising *= (p + 2 * k + 1) * (p + 2 * k + 2);
    power /= N * N;
  }
  return head + tail;
}

}  // namespace mathieu::specfun
