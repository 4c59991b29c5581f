#pragma once

#include <map>
#include <string>
#include <vector>

#include "mathieu/ineq/checks.hpp"

namespace mathieu::ineq {

/// Axis name → values. The grid is the Cartesian product of the axes.
using GridSpec = std::map<std::string, std::vector<double>>;

/// Parses "mu=1.5,2;nu=1;r=0.5". Throws DomainError on malformed input.
GridSpec parse_grid(const std::string& text);

/// monotone, logconvex, 001, 002, re1, turan, zzkk, mm, wilkins.
const std::vector<std::string>& suite_names();

/// Default axes of a suite; throws DomainError for an unknown suite.
GridSpec default_grid(const std::string& suite);

struct SuiteOptions {
  GridSpec overrides;  // replaces the named default axes
  unsigned jobs = 0;   // 0: default_jobs()
  double tol = kDefaultTolerance;
};

/// MATHIEU_KIT_JOBS if set to a positive integer, else the hardware thread count.
unsigned default_jobs();

/// Runs a suite ("all" runs every suite) over its grid. Points that violate a
/// convergence guard are skipped; a point whose evaluation throws yields an
/// inconclusive report carrying the message. Reports are sorted by check id
/// and grid point, so the output does not depend on the job count.
std::vector<CheckReport> run_suite(const std::string& suite, const SuiteOptions& options = {});

}  // namespace mathieu::ineq
