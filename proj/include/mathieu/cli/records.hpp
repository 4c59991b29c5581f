#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mathieu/ineq/checks.hpp"

namespace mathieu::cli {

enum class Format { csv, json, plain };

/// "csv", "json" or "plain"; throws DomainError otherwise.
Format parse_format(const std::string& name);

/// One computed quantity. Real values leave `value_im` unused (`is_complex`
/// false); a failed evaluation carries NaN and the message in `status`.
struct OutputRecord {
  std::string command;
  std::string quantity;
  std::string method;
  std::string sequence;
  std::vector<std::pair<std::string, double>> inputs;
  double value = 0.0;
  double value_im = 0.0;
  bool is_complex = false;
  double error_bound = 0.0;
  std::int64_t terms = 0;
  double wall_time_ms = 0.0;
  std::string status = "ok";
};

/// %.17g, with "nan", "inf" and "-inf" for non-finite values.
std::string format_double(double x);

std::string to_csv(const std::vector<OutputRecord>& records);
std::string to_json(const std::vector<OutputRecord>& records);
std::string to_plain(const std::vector<OutputRecord>& records);
std::vector<OutputRecord> records_from_csv(const std::string& text);
std::vector<OutputRecord> records_from_json(const std::string& text);

std::string to_csv(const std::vector<ineq::CheckReport>& reports);
std::string to_json(const std::vector<ineq::CheckReport>& reports);
std::string to_plain(const std::vector<ineq::CheckReport>& reports);
std::vector<ineq::CheckReport> reports_from_csv(const std::string& text);
std::vector<ineq::CheckReport> reports_from_json(const std::string& text);

}  // namespace mathieu::cli
