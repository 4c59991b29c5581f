#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace mathieu {

/// A computed value together with a bound on its absolute error, the amount
/// of work spent (series terms or quadrature nodes) and the method used.
template <typename Value>
struct BasicEvalResult {
  Value value{};
  double abs_error_bound = 0.0;
  std::int64_t terms_used = 0;
  std::string method;
};

using EvalResult = BasicEvalResult<double>;
using ComplexEvalResult = BasicEvalResult<std::complex<double>>;

}  // namespace mathieu
