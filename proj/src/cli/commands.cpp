#include "mathieu/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "mathieu/cli/records.hpp"
#include "mathieu/dist/distribution.hpp"
#include "mathieu/errors.hpp"
#include "mathieu/ineq/suite.hpp"
#include "mathieu/quadrature/representations.hpp"
#include "mathieu/series/routes.hpp"
#include "mathieu/series/series.hpp"

namespace mathieu::cli {

namespace {

constexpr double kDefaultTol = 1e-10;

const std::vector<std::string> kMethods{"series",         "theorem1", "remark3",
                                        "theorem2",       "mittag-leffler", "phi-star"};

class UsageError : public Error {
 public:
  using Error::Error;
};

struct SeriesOptions {
  series::SeriesParams params;
  std::string seq_kind = "power";
  double gamma = 1.0;
  double delta = 1.0;
  std::string table;
  double tail_exponent = 1.0;
  int q = 2;
  int m_max = 200;
  double tol = kDefaultTol;
  std::string format = "plain";
};

void add_series_options(CLI::App* app, SeriesOptions& o) {
  app->add_option("--alpha", o.params.alpha, "exponent alpha > 0")->capture_default_str();
  app->add_option("--beta", o.params.beta, "exponent beta >= 0")->capture_default_str();
  app->add_option("--mu", o.params.mu, "exponent mu > 0")->capture_default_str();
  app->add_option("--nu", o.params.nu, "Pochhammer parameter nu > 0")->capture_default_str();
  app->add_option("--r", o.params.r, "r >= 0")->capture_default_str();
  app->add_option("--z", o.params.z, "power-series argument, |z| <= 1")->capture_default_str();
  app->add_option("--seq", o.seq_kind, "sequence a_n: power (n^gamma), gamma (Gamma(gamma n + delta)), table")
      ->check(CLI::IsMember({"power", "gamma", "table"}))
      ->capture_default_str();
  app->add_option("--gamma", o.gamma, "sequence exponent or Gamma slope")->capture_default_str();
  app->add_option("--delta", o.delta, "Gamma offset for --seq gamma")->capture_default_str();
  app->add_option("--table", o.table, "file with a_1, a_2, ... one per line (--seq table)");
  app->add_option("--tail-exponent", o.tail_exponent, "growth exponent assumed past the table")
      ->capture_default_str();
  app->add_option("--q", o.q, "order q of the 1Fq kernel (remark3)")->capture_default_str();
  app->add_option("--m-max", o.m_max, "outer terms for the Mittag-Leffler route")->capture_default_str();
  app->add_option("--tol", o.tol, "absolute tolerance")->capture_default_str();
  app->add_option("--format", o.format, "csv, json or plain")
      ->check(CLI::IsMember({"csv", "json", "plain"}))
      ->capture_default_str();
}

series::SequenceSpec make_sequence(const SeriesOptions& o) {
  if (o.seq_kind == "gamma") return series::GammaArithmetic{o.gamma, o.delta};
  if (o.seq_kind == "table") {
    if (o.table.empty()) throw UsageError("--seq table requires --table FILE");
    std::ifstream in(o.table);
    if (!in) throw UsageError("cannot open table file '" + o.table + "'");
    return series::read_table(in, o.tail_exponent);
  }
  return series::PowerOfIndex{o.gamma};
}

const series::PowerOfIndex& require_power(const series::SequenceSpec& seq, const std::string& method) {
  const auto* p = std::get_if<series::PowerOfIndex>(&seq);
  if (!p) throw DomainError(method + " requires --seq power");
  return *p;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

quadrature::QuadratureSpec quad_spec(double tol) {
  quadrature::QuadratureSpec qs;
  qs.rel_tol = tol;
  qs.abs_tol = tol * 1e-2;
  return qs;
}

EvalResult evaluate(const std::string& method, const SeriesOptions& o,
                    const series::SequenceSpec& seq) {
  const auto& p = o.params;
  if (method == "series") return series::eval_series(p, seq, o.tol);
  if (method == "theorem1") {
    return quadrature::eval_theorem1(p, require_power(seq, method), quad_spec(o.tol));
  }
  if (method == "remark3") {
    const double g = require_power(seq, method).gamma;
    require(o.q >= 1, "remark3 requires q >= 1");
    require(std::fabs(g - o.q / p.alpha) <= 1e-14 * (o.q / p.alpha),
            "remark3 requires a_n = n^(q/alpha): pass --gamma " + format_double(o.q / p.alpha));
    return quadrature::eval_remark3(o.q, p, quad_spec(o.tol));
  }
  if (method == "theorem2") {
    require(p.mu == 1.5 && p.nu == 1.0 && p.z == 1.0, "theorem2 requires mu = 3/2, nu = 1, z = 1");
    return quadrature::eval_theorem2(p.alpha, p.beta, require_power(seq, method), p.r,
                                     quad_spec(o.tol));
  }
  if (method == "mittag-leffler") {
    const auto* g = std::get_if<series::GammaArithmetic>(&seq);
    require(g != nullptr, "mittag-leffler requires --seq gamma");
    return series::eval_via_mittag_leffler(p, *g, o.m_max, o.tol);
  }
  if (method == "phi-star") {
    require(p.alpha == 2.0 && p.beta == 1.0 && p.mu == 2.0 && require_power(seq, method).gamma == 1.0,
            "phi-star requires alpha = 2, beta = 1, mu = 2, a_n = n");
    return series::eval_phi_star_difference(p.nu, p.r, p.z, o.tol).result;
  }
  throw UsageError("unknown method '" + method + "'");
}

std::vector<std::pair<std::string, double>> series_inputs(const SeriesOptions& o) {
  const auto& p = o.params;
  return {{"alpha", p.alpha}, {"beta", p.beta}, {"mu", p.mu}, {"nu", p.nu},
          {"r", p.r},         {"z", p.z},       {"tol", o.tol}};
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

OutputRecord record_from(const std::string& command, const std::string& quantity,
                         const EvalResult& r) {
  OutputRecord rec;
  rec.command = command;
  rec.quantity = quantity;
  rec.method = r.method;
  rec.value = r.value;
  rec.error_bound = r.abs_error_bound;
  rec.terms = r.terms_used;
  return rec;
}

void emit(std::ostream& out, const std::string& format, const std::vector<OutputRecord>& recs) {
  switch (parse_format(format)) {
    case Format::csv:
      out << to_csv(recs);
      break;
    case Format::json:
      out << to_json(recs);
      break;
    case Format::plain:
      out << to_plain(recs);
      break;
  }
}

int cmd_eval(const SeriesOptions& o, const std::string& method, std::ostream& out) {
  const auto seq = make_sequence(o);
  const auto t0 = std::chrono::steady_clock::now();
  const EvalResult r = evaluate(method, o, seq);
  OutputRecord rec = record_from("eval", "S", r);
  rec.sequence = series::describe(seq);
  rec.inputs = series_inputs(o);
  rec.wall_time_ms = elapsed_ms(t0);
  emit(out, o.format, {rec});
  return kExitOk;
}

int cmd_compare(const SeriesOptions& o, const std::vector<std::string>& methods, std::ostream& out) {
  if (methods.size() < 2) throw UsageError("compare needs at least two methods");
  for (const auto& m : methods) {
    if (std::find(kMethods.begin(), kMethods.end(), m) == kMethods.end()) {
      throw UsageError("unknown method '" + m + "'");
    }
  }
  const auto seq = make_sequence(o);
  std::vector<OutputRecord> recs;
  std::vector<const OutputRecord*> ok;
  for (const auto& m : methods) {
    const auto t0 = std::chrono::steady_clock::now();
    OutputRecord rec;
    try {
      rec = record_from("compare", "S", evaluate(m, o, seq));
    } catch (const Error& e) {
      rec.command = "compare";
      rec.quantity = "S";
      rec.method = m;
      rec.value = std::nan("");
      rec.error_bound = std::nan("");
      rec.status = std::string("error: ") + e.what();
    }
    rec.sequence = series::describe(seq);
    rec.inputs = series_inputs(o);
    rec.wall_time_ms = elapsed_ms(t0);
    recs.push_back(std::move(rec));
  }
  for (const auto& r : recs) {
    if (r.status == "ok") ok.push_back(&r);
  }
  if (ok.size() < 2) {
    emit(out, o.format, recs);
    throw UsageError("fewer than two methods apply at this point");
  }
  // The pair with the largest deviation relative to its combined budget.
  double worst_ratio = -1.0;
  OutputRecord dev;
  dev.command = "compare";
  dev.quantity = "deviation";
  dev.sequence = series::describe(seq);
  dev.inputs = series_inputs(o);
  for (std::size_t i = 0; i < ok.size(); ++i) {
    for (std::size_t j = i + 1; j < ok.size(); ++j) {
      const double d = std::fabs(ok[i]->value - ok[j]->value);
      const double budget = ok[i]->error_bound + ok[j]->error_bound;
      const double ratio = budget > 0 ? d / budget : (d > 0 ? INFINITY : 0.0);
      if (ratio > worst_ratio) {
        worst_ratio = ratio;
        dev.method = ok[i]->method + "|" + ok[j]->method;
        dev.value = d;
        dev.error_bound = budget;
      }
    }
  }
  const bool within = worst_ratio <= 1.0;
  dev.status = within ? "ok" : "exceeds budget";
  recs.push_back(dev);
  emit(out, o.format, recs);
  return within ? kExitOk : kExitFailure;
}

struct CheckOptions {
  std::string suite = "all";
  std::string grid;
  unsigned jobs = 0;
  double tol = ineq::kDefaultTolerance;
  std::string format = "plain";
};

int cmd_check(const CheckOptions& o, std::ostream& out, std::ostream& err) {
  ineq::SuiteOptions so;
  so.overrides = ineq::parse_grid(o.grid);
  so.jobs = o.jobs ? o.jobs : ineq::default_jobs();
  so.tol = o.tol;
  const auto reports = ineq::run_suite(o.suite, so);
  if (reports.empty()) throw UsageError("no grid point of suite '" + o.suite + "' passes the guards");
  std::size_t counts[3] = {0, 0, 0};
  for (const auto& r : reports) ++counts[static_cast<int>(r.verdict)];
  const std::string summary = "summary: " + std::to_string(reports.size()) + " reports, " +
                              std::to_string(counts[0]) + " pass, " + std::to_string(counts[1]) +
                              " fail, " + std::to_string(counts[2]) + " inconclusive\n";
  switch (parse_format(o.format)) {
    case Format::csv:
      out << to_csv(reports);
      err << summary;
      break;
    case Format::json:
      out << to_json(reports);
      err << summary;
      break;
    case Format::plain:
      out << to_plain(reports) << summary;
      break;
  }
  return counts[static_cast<int>(ineq::Verdict::fail)] ? kExitFailure : kExitOk;
}

struct DistOptions {
  dist::DistributionParams params = dist::DistributionParams::standard(2.0, 3.0, 1.0, 1.0);
  double beta = std::nan("");
  double tol = kDefaultTol;
  std::string format = "plain";
  std::int64_t n = 1;
  double t = 0.0;
  std::string cf_method = "series";
  std::size_t count = 1;
  std::uint64_t seed = 0;
};

std::vector<std::pair<std::string, double>> dist_inputs(const DistOptions& o) {
  const auto& p = o.params;
  return {{"alpha", p.alpha}, {"beta", p.beta}, {"mu", p.mu}, {"nu", p.nu}, {"r", p.r}, {"tol", o.tol}};
}

int cmd_dist(DistOptions o, const std::string& action, std::ostream& out) {
  o.params.beta = std::isnan(o.beta) ? o.params.alpha : o.beta;
  const auto t0 = std::chrono::steady_clock::now();
  const auto d = dist::make_distribution(o.params, o.tol);
  std::vector<OutputRecord> recs;
  auto push = [&](const std::string& quantity, const EvalResult& r,
                  std::vector<std::pair<std::string, double>> extra) {
    OutputRecord rec = record_from("dist", quantity, r);
    rec.inputs = dist_inputs(o);
    rec.inputs.insert(rec.inputs.end(), extra.begin(), extra.end());
    recs.push_back(std::move(rec));
  };
  if (action == "pmf" || action == "cdf") {
    if (o.n < 1) throw DomainError(action + ": n must be >= 1");
    EvalResult r;
    r.value = action == "pmf" ? d.pmf(o.n) : d.cdf(o.n);
    r.abs_error_bound = std::fabs(r.value) * (d.norm_error() / d.normalizer() + 1e-14);
    r.terms_used = action == "pmf" ? 1 : o.n;
    r.method = action == "pmf" ? "term/normalizer" : "cumulative-sum";
    push(action, r, {{"n", static_cast<double>(o.n)}});
  } else if (action == "moments") {
    push("mean", d.mean(), {});
    push("variance", d.variance(), {});
  } else if (action == "cf") {
    ComplexEvalResult c;
    if (o.cf_method == "integral") {
      const auto& p = o.params;
      require(p.alpha == 2.0 && p.beta == 1.0 && p.mu > 1.0,
              "cf --method integral requires alpha = 2, beta = 1, mu > 1");
      c = quadrature::eval_charfn_integral(p.mu - 1.0, p.nu, p.r, o.t, quad_spec(o.tol));
    } else {
      c = d.charfn(o.t, o.tol);
    }
    OutputRecord rec;
    rec.command = "dist";
    rec.quantity = "cf";
    rec.method = c.method;
    rec.inputs = dist_inputs(o);
    rec.inputs.emplace_back("t", o.t);
    rec.value = c.value.real();
    rec.value_im = c.value.imag();
    rec.is_complex = true;
    rec.error_bound = c.abs_error_bound;
    rec.terms = c.terms_used;
    recs.push_back(std::move(rec));
  } else if (action == "sample") {
    const auto draws = d.sample(o.count, o.seed);
    switch (parse_format(o.format)) {
      case Format::csv:
        out << "draw\n";
        for (auto x : draws) out << x << "\n";
        break;
      case Format::json: {
        out << "[";
        for (std::size_t i = 0; i < draws.size(); ++i) out << (i ? ", " : "") << draws[i];
        out << "]\n";
        break;
      }
      case Format::plain:
        for (auto x : draws) out << x << "\n";
        break;
    }
    return kExitOk;
  } else {
    throw UsageError("dist needs an action: pmf, cdf, moments, cf or sample");
  }
  const double ms = elapsed_ms(t0);
  for (auto& r : recs) r.wall_time_ms = ms;
  emit(out, o.format, recs);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"mathieu-kit: generalized Mathieu series, their integral forms, the Mathieu "
               "distribution and inequality checks"};
  app.name("mathieu-kit");
  app.require_subcommand(1);

  SeriesOptions eval_opts;
  std::string method = "series";
  auto* eval = app.add_subcommand("eval", "evaluate S_{mu,nu}^{(alpha,beta)}(r; a; z) by one route");
  add_series_options(eval, eval_opts);
  eval->add_option("--method", method, "series, theorem1, remark3, theorem2, mittag-leffler, phi-star")
      ->check(CLI::IsMember(kMethods))
      ->capture_default_str();

  SeriesOptions cmp_opts;
  std::vector<std::string> methods;
  auto* compare = app.add_subcommand("compare", "evaluate by several routes and compare");
  add_series_options(compare, cmp_opts);
  compare->add_option("--methods", methods, "comma-separated list of at least two methods")
      ->delimiter(',')
      ->required();

  CheckOptions chk;
  auto* check = app.add_subcommand("check", "run an inequality suite over its grid");
  check->add_option("--suite", chk.suite,
                    "all, monotone, logconvex, 001, 002, re1, turan, zzkk, mm, wilkins")
      ->capture_default_str();
  check->add_option("--grid", chk.grid, "axis overrides, e.g. \"mu=2,3;r=1\"");
  check->add_option("--jobs", chk.jobs, "worker threads (default: MATHIEU_KIT_JOBS or all cores)");
  check->add_option("--tol", chk.tol, "tolerance of every series evaluation")->capture_default_str();
  check->add_option("--format", chk.format, "csv, json or plain")
      ->check(CLI::IsMember({"csv", "json", "plain"}))
      ->capture_default_str();

  DistOptions dopt;
  auto* distc = app.add_subcommand("dist", "Mathieu distribution P(X = n), n >= 1");
  distc->add_option("--alpha", dopt.params.alpha, "alpha > 0")->capture_default_str();
  distc->add_option("--beta", dopt.beta, "beta (default: alpha)");
  distc->add_option("--mu", dopt.params.mu, "mu")->capture_default_str();
  distc->add_option("--nu", dopt.params.nu, "nu > 0")->capture_default_str();
  distc->add_option("--r", dopt.params.r, "r")->capture_default_str();
  distc->add_option("--tol", dopt.tol, "absolute tolerance")->capture_default_str();
  distc->add_option("--format", dopt.format, "csv, json or plain")
      ->check(CLI::IsMember({"csv", "json", "plain"}))
      ->capture_default_str();
  distc->require_subcommand(1);
  auto* pmf = distc->add_subcommand("pmf", "P(X = n)");
  pmf->add_option("n", dopt.n)->required();
  auto* cdf = distc->add_subcommand("cdf", "P(X <= n)");
  cdf->add_option("n", dopt.n)->required();
  auto* moments = distc->add_subcommand("moments", "mean and variance");
  auto* cf = distc->add_subcommand("cf", "characteristic function E[exp(itX)]");
  cf->add_option("t", dopt.t)->required()->allow_extra_args(false);
  cf->add_option("--method", dopt.cf_method, "series or integral (alpha = 2, beta = 1)")
      ->check(CLI::IsMember({"series", "integral"}))
      ->capture_default_str();
  auto* sample = distc->add_subcommand("sample", "inverse-CDF draws, one per line");
  sample->add_option("count", dopt.count)->required();
  sample->add_option("--seed", dopt.seed, "mt19937_64 seed")->capture_default_str();
  for (auto* sub : {pmf, cdf, moments, cf, sample}) sub->fallthrough();

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return cmd_eval(eval_opts, method, out);
    if (compare->parsed()) return cmd_compare(cmp_opts, methods, out);
    if (check->parsed()) return cmd_check(chk, out, err);
    for (auto* sub : {pmf, cdf, moments, cf, sample}) {
      if (sub->parsed()) return cmd_dist(dopt, sub->get_name(), out);
    }
  } catch (const DivergenceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace mathieu::cli
