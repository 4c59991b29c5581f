#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace mathieu::series {

/// Parameters (α, β, μ, ν, r, z) of
/// S_{μ,ν}^{(α,β)}(r, a; z) = Σ_{n≥1} 2 a_n^β (ν)_n zⁿ / ((a_n^α + r²)^μ n!).
struct SeriesParams {
  double alpha = 2.0;
  double beta = 1.0;  // 0 is admitted (a_n^0 = 1)
  double mu = 2.0;
  double nu = 1.0;
  double r = 0.0;
  double z = 1.0;

  void validate() const;
};

/// a_n = n^γ.
struct PowerOfIndex {
  double gamma = 1.0;
};

/// a_n = Γ(γn + δ).
struct GammaArithmetic {
  double gamma = 1.0;
  double delta = 1.0;
};

/// a_1, ..., a_L given explicitly. Terms past L are never evaluated;
/// `tail_exponent` e asserts a_n ≥ a_L (n/L)^e beyond the table and is used
/// only to bound the remainder.
struct ExplicitTable {
  std::vector<double> values;
  double tail_exponent = 0.0;
};

using SequenceSpec = std::variant<PowerOfIndex, GammaArithmetic, ExplicitTable>;

void validate(const SequenceSpec& seq);

/// log a_n for n ≥ 1. Throws OutOfRangeError past the end of a table.
double log_sequence(const SequenceSpec& seq, std::int64_t n);

/// Reads one positive real per line (blank lines and '#' comments skipped);
/// the values must be strictly increasing.
ExplicitTable read_table(std::istream& in, double tail_exponent);

std::string describe(const SequenceSpec& seq);

}  // namespace mathieu::series
