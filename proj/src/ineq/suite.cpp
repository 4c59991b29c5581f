#include "mathieu/ineq/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include "mathieu/errors.hpp"
#include "mathieu/series/series.hpp"

namespace mathieu::ineq {

namespace {

using series::PowerOfIndex;
using series::SeriesParams;

const std::vector<double> kRGrid{0.1, 0.5, 1.0, 2.0, 5.0, 10.0};

GridSpec series_axes() {
  return {{"alpha", {2.0}}, {"beta", {1.0}}, {"mu", {1.5, 2.0, 3.0}},
          {"nu", {1.0, 2.0}}, {"z", {0.5, 1.0}}, {"gamma", {1.0}}};
}

struct Task {
  std::string id;
  std::vector<std::pair<std::string, double>> grid;
  std::function<std::vector<CheckReport>()> run;
};

// Cartesian product over the named axes, in the order given.
void for_each_point(const GridSpec& g, const std::vector<std::string>& axes,
                    const std::function<void(const std::map<std::string, double>&)>& fn) {
  std::map<std::string, double> point;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == axes.size()) {
      fn(point);
      return;
    }
    for (double v : g.at(axes[i])) {
      point[axes[i]] = v;
      rec(i + 1);
    }
  };
  rec(0);
}

SeriesParams series_params(const std::map<std::string, double>& p) {
  SeriesParams s;
  s.alpha = p.at("alpha");
  s.beta = p.at("beta");
  s.mu = p.at("mu");
  s.nu = p.at("nu");
  s.z = p.at("z");
  return s;
}

bool series_ok(const SeriesParams& s, double gamma) {
  try {
    s.validate();
    if (!(s.z >= 0.0 && s.z <= 1.0) || !(gamma > 0.0)) return false;
    return series::check_convergence(s, PowerOfIndex{gamma}).verdict ==
           series::Verdict::converges;
  } catch (const Error&) {
    return false;
  }
}

std::vector<std::pair<std::string, double>> as_grid(const std::map<std::string, double>& p) {
  return {p.begin(), p.end()};
}

const std::vector<std::string> kSeriesAxes{"alpha", "beta", "mu", "nu", "z", "gamma"};

void build_tasks(const std::string& suite, const GridSpec& g, double tol,
                 std::vector<Task>& tasks) {
  auto add = [&](std::vector<std::pair<std::string, double>> grid,
                 std::function<std::vector<CheckReport>()> fn) {
    tasks.push_back({suite, std::move(grid), std::move(fn)});
  };
  if (suite == "monotone") {
    for_each_point(g, kSeriesAxes, [&](const auto& p) {
      const SeriesParams s = series_params(p);
      const double gamma = p.at("gamma");
      if (!series_ok(s, gamma)) return;
      for (double order : g.at("order")) {
        for (double h : g.at("h")) {
          for (double x : g.at("x")) {
            auto grid = as_grid(p);
            grid.emplace_back("x", x);
            add(grid, [=] {
              return check_complete_monotonicity(s, PowerOfIndex{gamma}, static_cast<int>(order),
                                                 {x}, h, tol);
            });
          }
        }
      }
    });
  } else if (suite == "logconvex") {
    for_each_point(g, kSeriesAxes, [&](const auto& p) {
      const SeriesParams s = series_params(p);
      const double gamma = p.at("gamma");
      if (!series_ok(s, gamma)) return;
      const auto& xs = g.at("x");
      for (double lambda : g.at("lambda")) {
        std::vector<std::pair<double, double>> pairs;
        for (std::size_t i = 0; i < xs.size(); ++i) {
          for (std::size_t j = i + 1; j < xs.size(); ++j) pairs.emplace_back(xs[i], xs[j]);
        }
        auto grid = as_grid(p);
        grid.emplace_back("lambda", lambda);
        add(grid, [=] { return check_log_convexity(s, PowerOfIndex{gamma}, pairs, lambda, tol); });
      }
    });
  } else if (suite == "001") {
    for_each_point(g, kSeriesAxes, [&](const auto& p) {
      const SeriesParams s = series_params(p);
      const double gamma = p.at("gamma");
      if (!series_ok(s, gamma)) return;
      const auto& xs = g.at("x");
      for (std::size_t i = 0; i < xs.size(); ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
          const double x1 = xs[i], x2 = xs[j];
          auto grid = as_grid(p);
          grid.emplace_back("x1", x1);
          grid.emplace_back("x2", x2);
          add(grid, [=] {
            auto [a, b] = check_chain_001(s, PowerOfIndex{gamma}, x1, x2, tol);
            return std::vector<CheckReport>{a, b};
          });
        }
      }
    });
  } else if (suite == "002") {
    for_each_point(g, kSeriesAxes, [&](const auto& p) {
      SeriesParams s = series_params(p);
      const double gamma = p.at("gamma");
      if (!series_ok(s, gamma)) return;
      for (double r : g.at("r")) {
        s.r = r;
        auto grid = as_grid(p);
        grid.emplace_back("r", r);
        add(grid, [=] { return std::vector<CheckReport>{check_lower_bound_002(s, PowerOfIndex{gamma}, tol)}; });
      }
    });
  } else if (suite == "re1") {
    for_each_point(g, {"mu", "r"}, [&](const auto& p) {
      const double mu = p.at("mu"), r = p.at("r");
      if (!(mu > 1.0)) return;
      add(as_grid(p), [=] { return std::vector<CheckReport>{check_re1(mu, r, tol)}; });
    });
  } else if (suite == "turan") {
    for_each_point(g, {"alpha", "mu", "nu", "r"}, [&](const auto& p) {
      const double a = p.at("alpha"), mu = p.at("mu"), nu = p.at("nu"), r = p.at("r");
      if (!(a > 0.0 && nu > 0.0 && a * mu - a - 2.0 > nu)) return;
      add(as_grid(p), [=] { return std::vector<CheckReport>{check_turan(a, mu, nu, r, tol)}; });
    });
  } else if (suite == "zzkk") {
    for_each_point(g, {"mu", "nu", "r"}, [&](const auto& p) {
      const double mu = p.at("mu"), nu = p.at("nu"), r = p.at("r");
      if (!(nu > 0.0 && 2.0 * mu - 3.0 > nu)) return;
      add(as_grid(p), [=] { return std::vector<CheckReport>{check_zzkk(mu, nu, r, tol)}; });
    });
  } else if (suite == "mm") {
    for_each_point(g, {"nu", "r"}, [&](const auto& p) {
      const double nu = p.at("nu"), r = p.at("r");
      if (!(nu >= 1.0 && nu < 3.0)) return;
      add(as_grid(p), [=] { return std::vector<CheckReport>{check_mm(nu, r, tol)}; });
    });
  } else if (suite == "wilkins") {
    for_each_point(g, {"r"}, [&](const auto& p) {
      const double r = p.at("r");
      add(as_grid(p), [=] { return std::vector<CheckReport>{check_wilkins(r, tol)}; });
    });
  }
}

bool report_less(const CheckReport& a, const CheckReport& b) {
  if (a.check_id != b.check_id) return a.check_id < b.check_id;
  return a.grid_point < b.grid_point;
}

}  // namespace

GridSpec parse_grid(const std::string& text) {
  GridSpec out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw DomainError("grid: expected key=v1,v2 in '" + item + "'");
    std::string key = item.substr(0, eq);
    key.erase(0, key.find_first_not_of(" \t"));
    key.erase(key.find_last_not_of(" \t") + 1);
    if (key.empty()) throw DomainError("grid: empty axis name in '" + item + "'");
    std::vector<double> values;
    std::stringstream vs(item.substr(eq + 1));
    std::string v;
    while (std::getline(vs, v, ',')) {
      std::size_t used = 0;
      double d = 0.0;
      try {
        d = std::stod(v, &used);
      } catch (const std::exception&) {
        throw DomainError("grid: bad number '" + v + "' for axis " + key);
      }
      if (v.find_first_not_of(" \t", used) != std::string::npos || !std::isfinite(d)) {
        throw DomainError("grid: bad number '" + v + "' for axis " + key);
      }
      values.push_back(d);
    }
    if (values.empty()) throw DomainError("grid: no values for axis " + key);
    if (!out.emplace(key, std::move(values)).second) {
      throw DomainError("grid: axis " + key + " given twice");
    }
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"monotone", "logconvex", "001", "002", "re1",
                                              "turan",    "zzkk",      "mm",  "wilkins"};
  return names;
}

GridSpec default_grid(const std::string& suite) {
  if (suite == "monotone") {
    GridSpec g = series_axes();
    g["x"] = {0.5, 1.0, 2.0, 4.0};
    g["h"] = {0.25};
    g["order"] = {6};
    return g;
  }
  if (suite == "logconvex") {
    GridSpec g = series_axes();
    g["x"] = {0.5, 1.0, 2.0, 4.0};
    g["lambda"] = {0.25, 0.5, 0.75};
    return g;
  }
  if (suite == "001") {
    GridSpec g = series_axes();
    g["x"] = {0.5, 1.0, 2.0, 4.0};
    return g;
  }
  if (suite == "002") {
    GridSpec g = series_axes();
    g["r"] = kRGrid;
    return g;
  }
  if (suite == "re1") return {{"mu", {1.5, 2.0, 3.0}}, {"r", kRGrid}};
  if (suite == "turan") {
    return {{"alpha", {2.0, 3.0}}, {"mu", {3.0, 4.0}}, {"nu", {1.0, 2.0}}, {"r", {0.5, 1.0, 2.0}}};
  }
  if (suite == "zzkk") return {{"mu", {3.0, 3.5, 4.0}}, {"nu", {0.5, 1.0, 2.0}}, {"r", kRGrid}};
  if (suite == "mm") return {{"nu", {1.0, 1.5, 2.0}}, {"r", kRGrid}};
  if (suite == "wilkins") return {{"r", kRGrid}};
  throw DomainError("unknown suite '" + suite + "'");
}

unsigned default_jobs() {
  if (const char* env = std::getenv("MATHIEU_KIT_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<CheckReport> run_suite(const std::string& suite, const SuiteOptions& options) {
  if (!(options.tol > 0.0)) throw DomainError("suite: tolerance must be positive");
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = suite_names();
  } else {
    default_grid(suite);  // validates the name
    suites = {suite};
  }
  std::vector<Task> tasks;
  for (const auto& s : suites) {
    GridSpec g = default_grid(s);
    for (const auto& [axis, values] : options.overrides) {
      if (!g.count(axis)) {
        if (suite == "all") continue;
        throw DomainError("suite " + s + " has no axis '" + axis + "'");
      }
      g[axis] = values;
    }
    build_tasks(s, g, options.tol, tasks);
  }

  std::vector<CheckReport> reports;
  std::mutex mu;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
      std::vector<CheckReport> got;
      try {
        got = tasks[i].run();
      } catch (const std::exception& e) {
        CheckReport r;
        r.check_id = tasks[i].id;
        r.grid_point = tasks[i].grid;
        r.lhs = r.rhs = r.margin = r.error_budget = std::numeric_limits<double>::quiet_NaN();
        r.verdict = Verdict::inconclusive;
        r.note = e.what();
        got.push_back(std::move(r));
      }
      std::lock_guard<std::mutex> lock(mu);
      for (auto& r : got) reports.push_back(std::move(r));
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs ? options.jobs : default_jobs(),
                                                        static_cast<unsigned>(tasks.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::stable_sort(reports.begin(), reports.end(), report_less);
  return reports;
}

}  // namespace mathieu::ineq
