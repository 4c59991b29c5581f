#include <cmath>
#include <istream>
#include <sstream>
#include <string>

#include "mathieu/errors.hpp"
#include "mathieu/series/params.hpp"
#include "mathieu/specfun/gamma.hpp"

namespace mathieu::series {

void SeriesParams::validate() const {
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  if (!(beta >= 0.0)) throw DomainError("beta must be nonnegative");
  if (!(mu > 0.0)) throw DomainError("mu must be positive");
  if (!(nu > 0.0)) throw DomainError("nu must be positive");
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw DomainError("r must be finite and nonnegative");
  }
  if (!(std::fabs(z) <= 1.0)) throw DomainError("z must lie in [-1, 1]");
}

void validate(const SequenceSpec& seq) {
  if (const auto* p = std::get_if<PowerOfIndex>(&seq)) {
    if (!(p->gamma > 0.0)) throw DomainError("power sequence: gamma must be positive");
  } else if (const auto* g = std::get_if<GammaArithmetic>(&seq)) {
    if (!(g->gamma > 0.0) || !(g->delta > 0.0)) {
      throw DomainError("gamma sequence: gamma and delta must be positive");
    }
  } else {
    const auto& t = std::get<ExplicitTable>(seq);
    if (t.values.empty()) throw DomainError("sequence table is empty");
    double last = 0.0;
    for (double v : t.values) {
      if (!(v > last) || !std::isfinite(v)) {
        throw DomainError("sequence table must be positive and strictly increasing");
      }
      last = v;
    }
  }
}

double log_sequence(const SequenceSpec& seq, std::int64_t n) {
  if (n < 1) throw DomainError("sequence index starts at 1");
  const double x = static_cast<double>(n);
  if (const auto* p = std::get_if<PowerOfIndex>(&seq)) {
    return p->gamma * std::log(x);
  }
  if (const auto* g = std::get_if<GammaArithmetic>(&seq)) {
    return specfun::log_abs_gamma(g->gamma * x + g->delta);
  }
  const auto& t = std::get<ExplicitTable>(seq);
  if (static_cast<std::size_t>(n) > t.values.size()) {
    throw OutOfRangeError("sequence table has " + std::to_string(t.values.size()) +
                          " entries, term " + std::to_string(n) + " requested");
  }
  return std::log(t.values[static_cast<std::size_t>(n - 1)]);
}

ExplicitTable read_table(std::istream& in, double tail_exponent) {
  ExplicitTable t;
  t.tail_exponent = tail_exponent;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    double v = 0.0;
    if (!(ls >> v)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw DomainError("sequence table line " + std::to_string(lineno) +
                        ": not a number");
    }
    std::string rest;
    if (ls >> rest) {
      throw DomainError("sequence table line " + std::to_string(lineno) +
                        ": one value per line expected");
    }
    t.values.push_back(v);
  }
  validate(SequenceSpec{t});
  return t;
}

std::string describe(const SequenceSpec& seq) {
  std::ostringstream out;
  out.precision(17);
  if (const auto* p = std::get_if<PowerOfIndex>(&seq)) {
    out << "n^" << p->gamma;
  } else if (const auto* g = std::get_if<GammaArithmetic>(&seq)) {
    out << "Gamma(" << g->gamma << "n+" << g->delta << ")";
  } else {
    const auto& t = std::get<ExplicitTable>(seq);
    out << "table[" << t.values.size() << "]^" << t.tail_exponent;
  }
  return out.str();
}

}  // namespace mathieu::series
