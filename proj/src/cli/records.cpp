#include "mathieu/cli/records.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "mathieu/errors.hpp"

namespace mathieu::cli {

namespace {

using Json = nlohmann::ordered_json;
using Pairs = std::vector<std::pair<std::string, double>>;

const char* const kRecordHeader =
    "command,quantity,method,sequence,inputs,value_re,value_im,error_bound,terms,wall_time_ms,status";
const char* const kReportHeader = "check_id,grid_point,lhs,rhs,margin,error_budget,verdict,note";

double parse_double(const std::string& s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0') throw DomainError("not a number: '" + s + "'");
  return v;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Splits CSV text into rows of fields (RFC 4180 quoting).
std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    if (c == '"') {
      quoted = true;
      any = true;
    } else if (c == ',') {
      row.push_back(std::move(field));
      field.clear();
      any = true;
    } else if (c == '\n') {
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else if (c != '\r') {
      field += c;
      any = true;
    }
  }
  if (any) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string pairs_field(const Pairs& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += ';';
    out += k + "=" + format_double(v);
  }
  return out;
}

Pairs parse_pairs(const std::string& s) {
  Pairs out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ';')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("bad key=value item '" + item + "'");
    out.emplace_back(item.substr(0, eq), parse_double(item.substr(eq + 1)));
  }
  return out;
}

std::string json_string(const std::string& s) { return Json(s).dump(); }

std::string json_number(double x) { return std::isfinite(x) ? format_double(x) : "null"; }

std::string json_pairs(const Pairs& p) {
  std::string out = "{";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += ", ";
    out += json_string(p[i].first) + ": " + json_number(p[i].second);
  }
  return out + "}";
}

double json_to_double(const Json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

Pairs pairs_from_json(const Json& j) {
  Pairs out;
  for (auto it = j.begin(); it != j.end(); ++it) out.emplace_back(it.key(), json_to_double(it.value()));
  return out;
}

void expect_header(const std::vector<std::vector<std::string>>& rows, const char* header,
                   std::size_t width) {
  if (rows.empty()) throw DomainError("csv: missing header");
  std::string h;
  for (std::size_t i = 0; i < rows[0].size(); ++i) h += (i ? "," : "") + rows[0][i];
  if (h != header) throw DomainError("csv: unexpected header '" + h + "'");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].size() != width) throw DomainError("csv: row " + std::to_string(i) + " has wrong width");
  }
}

ineq::Verdict parse_verdict(const std::string& s) {
  if (s == "pass") return ineq::Verdict::pass;
  if (s == "fail") return ineq::Verdict::fail;
  if (s == "inconclusive") return ineq::Verdict::inconclusive;
  throw DomainError("unknown verdict '" + s + "'");
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "plain") return Format::plain;
  throw DomainError("unknown format '" + name + "' (csv, json, plain)");
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string to_csv(const std::vector<OutputRecord>& records) {
  std::string out = std::string(kRecordHeader) + "\n";
  for (const auto& r : records) {
    out += csv_field(r.command) + "," + csv_field(r.quantity) + "," + csv_field(r.method) + "," +
           csv_field(r.sequence) + "," + csv_field(pairs_field(r.inputs)) + "," +
           format_double(r.value) + "," + (r.is_complex ? format_double(r.value_im) : "") + "," +
           format_double(r.error_bound) + "," + std::to_string(r.terms) + "," +
           format_double(r.wall_time_ms) + "," + csv_field(r.status) + "\n";
  }
  return out;
}

std::vector<OutputRecord> records_from_csv(const std::string& text) {
  const auto rows = parse_csv(text);
  expect_header(rows, kRecordHeader, 11);
  std::vector<OutputRecord> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& f = rows[i];
    OutputRecord r;
    r.command = f[0];
    r.quantity = f[1];
    r.method = f[2];
    r.sequence = f[3];
    r.inputs = parse_pairs(f[4]);
    r.value = parse_double(f[5]);
    r.is_complex = !f[6].empty();
    if (r.is_complex) r.value_im = parse_double(f[6]);
    r.error_bound = parse_double(f[7]);
    r.terms = std::strtoll(f[8].c_str(), nullptr, 10);
    r.wall_time_ms = parse_double(f[9]);
    r.status = f[10];
    out.push_back(std::move(r));
  }
  return out;
}

std::string to_json(const std::vector<OutputRecord>& records) {
  std::string out = "[";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    out += i ? ",\n  {" : "\n  {";
    out += "\"command\": " + json_string(r.command);
    out += ", \"quantity\": " + json_string(r.quantity);
    out += ", \"method\": " + json_string(r.method);
    out += ", \"sequence\": " + json_string(r.sequence);
    out += ", \"inputs\": " + json_pairs(r.inputs);
    if (r.is_complex) {
      out += ", \"value\": {\"re\": " + json_number(r.value) + ", \"im\": " + json_number(r.value_im) + "}";
    } else {
      out += ", \"value\": " + json_number(r.value);
    }
    out += ", \"error_bound\": " + json_number(r.error_bound);
    out += ", \"terms\": " + std::to_string(r.terms);
    out += ", \"wall_time_ms\": " + json_number(r.wall_time_ms);
    out += ", \"status\": " + json_string(r.status) + "}";
  }
  return out + (records.empty() ? "]\n" : "\n]\n");
}

std::vector<OutputRecord> records_from_json(const std::string& text) {
  std::vector<OutputRecord> out;
  try {
    for (const auto& j : Json::parse(text)) {
      OutputRecord r;
      r.command = j.at("command").get<std::string>();
      r.quantity = j.at("quantity").get<std::string>();
      r.method = j.at("method").get<std::string>();
      r.sequence = j.at("sequence").get<std::string>();
      r.inputs = pairs_from_json(j.at("inputs"));
      const Json& v = j.at("value");
      r.is_complex = v.is_object();
      if (r.is_complex) {
        r.value = json_to_double(v.at("re"));
        r.value_im = json_to_double(v.at("im"));
      } else {
        r.value = json_to_double(v);
      }
      r.error_bound = json_to_double(j.at("error_bound"));
      r.terms = j.at("terms").get<std::int64_t>();
      r.wall_time_ms = json_to_double(j.at("wall_time_ms"));
      r.status = j.at("status").get<std::string>();
      out.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("json: ") + e.what());
  }
  return out;
}

std::string to_plain(const std::vector<OutputRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    out += r.quantity + " = " + format_double(r.value);
    if (r.is_complex) out += (r.value_im < 0 ? " - " : " + ") + format_double(std::fabs(r.value_im)) + "i";
    out += "  +/- " + format_double(r.error_bound);
    out += "  [" + r.method + ", " + std::to_string(r.terms) + " terms/nodes]";
    if (r.status != "ok") out += "  " + r.status;
    out += "\n";
  }
  return out;
}

std::string to_csv(const std::vector<ineq::CheckReport>& reports) {
  std::string out = std::string(kReportHeader) + "\n";
  for (const auto& r : reports) {
    out += csv_field(r.check_id) + "," + csv_field(pairs_field(r.grid_point)) + "," +
           format_double(r.lhs) + "," + format_double(r.rhs) + "," + format_double(r.margin) + "," +
           format_double(r.error_budget) + "," + ineq::to_string(r.verdict) + "," +
           csv_field(r.note) + "\n";
  }
  return out;
}

std::vector<ineq::CheckReport> reports_from_csv(const std::string& text) {
  const auto rows = parse_csv(text);
  expect_header(rows, kReportHeader, 8);
  std::vector<ineq::CheckReport> out;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto& f = rows[i];
    ineq::CheckReport r;
    r.check_id = f[0];
    r.grid_point = parse_pairs(f[1]);
    r.lhs = parse_double(f[2]);
    r.rhs = parse_double(f[3]);
    r.margin = parse_double(f[4]);
    r.error_budget = parse_double(f[5]);
    r.verdict = parse_verdict(f[6]);
    r.note = f[7];
    out.push_back(std::move(r));
  }
  return out;
}

std::string to_json(const std::vector<ineq::CheckReport>& reports) {
  std::string out = "[";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    out += i ? ",\n  {" : "\n  {";
    out += "\"check_id\": " + json_string(r.check_id);
    out += ", \"grid_point\": " + json_pairs(r.grid_point);
    out += ", \"lhs\": " + json_number(r.lhs);
    out += ", \"rhs\": " + json_number(r.rhs);
    out += ", \"margin\": " + json_number(r.margin);
    out += ", \"error_budget\": " + json_number(r.error_budget);
    out += ", \"verdict\": " + json_string(ineq::to_string(r.verdict));
    out += ", \"note\": " + json_string(r.note) + "}";
  }
  return out + (reports.empty() ? "]\n" : "\n]\n");
}

std::vector<ineq::CheckReport> reports_from_json(const std::string& text) {
  std::vector<ineq::CheckReport> out;
  try {
    for (const auto& j : Json::parse(text)) {
      ineq::CheckReport r;
      r.check_id = j.at("check_id").get<std::string>();
      r.grid_point = pairs_from_json(j.at("grid_point"));
      r.lhs = json_to_double(j.at("lhs"));
      r.rhs = json_to_double(j.at("rhs"));
      r.margin = json_to_double(j.at("margin"));
      r.error_budget = json_to_double(j.at("error_budget"));
      r.verdict = parse_verdict(j.at("verdict").get<std::string>());
      r.note = j.at("note").get<std::string>();
      out.push_back(std::move(r));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("json: ") + e.what());
  }
  return out;
}

std::string to_plain(const std::vector<ineq::CheckReport>& reports) {
  std::string out;
  for (const auto& r : reports) {
    out += r.check_id + " " + ineq::to_string(r.verdict) + "  margin=" + format_double(r.margin) +
           " budget=" + format_double(r.error_budget) + "  " + pairs_field(r.grid_point);
    if (!r.note.empty()) out += "  (" + r.note + ")";
    out += "\n";
  }
  return out;
}

}  // namespace mathieu::cli
