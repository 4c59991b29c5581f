#include <cmath>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "mathieu/cli/commands.hpp"
#include "mathieu/cli/records.hpp"
#include "mathieu/errors.hpp"

using namespace mathieu;
using namespace mathieu::cli;

namespace {

constexpr double kS1 = 0.7942335427593188655830136;
constexpr double kZeta3 = 1.202056903159594285399738;
constexpr double kNorm = 0.3450817002977209000596049;  // α=2 μ=3 ν=1 r=1

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome mk(std::vector<std::string> args) {
  std::ostringstream out, err;
  Outcome r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::vector<OutputRecord> without_time(std::vector<OutputRecord> v) {
  for (auto& r : v) r.wall_time_ms = 0.0;
  return v;
}

}  // namespace

TEST(Format, Doubles) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(NAN), "nan");
  EXPECT_EQ(format_double(INFINITY), "inf");
  EXPECT_EQ(format_double(-INFINITY), "-inf");
  EXPECT_EQ(parse_format("json"), Format::json);
  EXPECT_THROW(parse_format("xml"), DomainError);
}

TEST(Eval, ClassicalRecord) {
  const Outcome r = mk({"eval", "--alpha", "2", "--beta", "1", "--mu", "2", "--nu", "1", "--r", "1",
                    "--z", "1", "--method", "series", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto recs = records_from_csv(r.out);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_EQ(recs[0].command, "eval");
  EXPECT_EQ(recs[0].status, "ok");
  EXPECT_LE(std::fabs(recs[0].value - kS1), recs[0].error_bound);
  EXPECT_GE(recs[0].terms, 1);
}

TEST(Eval, ZeroR) {
  const Outcome r = mk({"eval", "--r", "0", "--format", "json", "--tol", "1e-12"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto recs = records_from_json(r.out);
  ASSERT_EQ(recs.size(), 1u);
  EXPECT_LE(std::fabs(recs[0].value - 2 * kZeta3), recs[0].error_bound + 1e-15);
}

TEST(Eval, GuardFailureExitsTwo) {
  const Outcome r = mk({"eval", "--mu", "1", "--z", "1"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("gamma*(mu*alpha-beta) > nu"), std::string::npos) << r.err;
}

TEST(Eval, UsageErrors) {
  EXPECT_EQ(mk({"eval", "--method", "magic"}).code, kExitUsage);
  EXPECT_EQ(mk({"eval", "--alpha", "-1"}).code, kExitUsage);
  EXPECT_EQ(mk({"eval", "--z", "2"}).code, kExitUsage);
  EXPECT_EQ(mk({"eval", "--method", "theorem2", "--mu", "2"}).code, kExitUsage);
  EXPECT_EQ(mk({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(mk({}).code, kExitUsage);
  EXPECT_EQ(mk({"--help"}).code, kExitOk);
}

TEST(Eval, EveryMethod) {
  struct Case {
    std::vector<std::string> args;
  };
  const std::vector<Case> cases = {
      {{"eval", "--method", "theorem1", "--r", "1", "--z", "0.5"}},
      {{"eval", "--method", "remark3", "--alpha", "2", "--beta", "1", "--mu", "2", "--q", "2",
        "--r", "1", "--z", "0.5"}},
      {{"eval", "--method", "theorem2", "--mu", "1.5", "--r", "1"}},
      {{"eval", "--method", "mittag-leffler", "--seq", "gamma", "--r", "0.5", "--z", "0.5"}},
      {{"eval", "--method", "phi-star", "--r", "1", "--z", "0.5"}},
  };
  for (const auto& c : cases) {
    auto args = c.args;
    args.insert(args.end(), {"--format", "csv"});
    const Outcome r = mk(args);
    ASSERT_EQ(r.code, kExitOk) << c.args[2] << ": " << r.err;
    const auto recs = records_from_csv(r.out);
    ASSERT_EQ(recs.size(), 1u);
    EXPECT_TRUE(std::isfinite(recs[0].value));
  }
}

TEST(Eval, TableSequence) {
  const std::string path = ::testing::TempDir() + "mathieu_table.txt";
  {
    std::ofstream f(path);
    for (int n = 1; n <= 3000; ++n) f << n << "\n";
  }
  const Outcome r = mk({"eval", "--seq", "table", "--table", path, "--tail-exponent", "1", "--r", "1",
                    "--tol", "1e-6", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto recs = records_from_csv(r.out);
  EXPECT_LE(std::fabs(recs[0].value - kS1), recs[0].error_bound + 1e-15);
  EXPECT_EQ(mk({"eval", "--seq", "table", "--table", path + ".missing"}).code, kExitUsage);
}

TEST(Compare, CrossRoutes) {
  const Outcome a = mk({"compare", "--methods", "series,theorem1", "--r", "1", "--z", "1",
                    "--format", "csv"});
  EXPECT_EQ(a.code, kExitOk) << a.err;
  const auto recs = records_from_csv(a.out);
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_EQ(recs.back().quantity, "deviation");
  EXPECT_LE(recs.back().value, recs.back().error_bound);

  const Outcome b = mk({"compare", "--methods", "series,theorem2", "--mu", "1.5", "--r", "2"});
  EXPECT_EQ(b.code, kExitOk) << b.err;
}

TEST(Compare, UsageAndInapplicable) {
  EXPECT_EQ(mk({"compare", "--methods", "series"}).code, kExitUsage);
  const Outcome r = mk({"compare", "--methods", "series,theorem1,theorem2", "--r", "1", "--format",
                    "csv"});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  const auto recs = records_from_csv(r.out);
  ASSERT_EQ(recs.size(), 4u);
  EXPECT_EQ(recs[2].method, "theorem2");
  EXPECT_NE(recs[2].status, "ok");
  EXPECT_TRUE(std::isnan(recs[2].value));
  EXPECT_EQ(mk({"compare", "--methods", "series,theorem2", "--mu", "2"}).code, kExitUsage);
}

TEST(Check, WilkinsSuite) {
  const Outcome r = mk({"check", "--suite", "wilkins", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto reps = reports_from_csv(r.out);
  EXPECT_EQ(reps.size(), 6u);
  for (const auto& rep : reps) EXPECT_EQ(rep.verdict, ineq::Verdict::pass);
  EXPECT_NE(r.err.find("summary: 6 reports, 6 pass, 0 fail, 0 inconclusive"), std::string::npos);
}

TEST(Check, SinglePoint) {
  const Outcome r = mk({"check", "--suite", "turan", "--grid", "alpha=2;mu=4;nu=1;r=1", "--format",
                    "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto reps = reports_from_json(r.out);
  ASSERT_EQ(reps.size(), 1u);
  EXPECT_EQ(reps[0].check_id, "turan");
}

TEST(Check, PlainSummaryAndErrors) {
  const Outcome r = mk({"check", "--suite", "re1", "--jobs", "2"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("summary: 18 reports"), std::string::npos) << r.out;
  EXPECT_EQ(mk({"check", "--suite", "bogus"}).code, kExitUsage);
  EXPECT_EQ(mk({"check", "--suite", "wilkins", "--grid", "r="}).code, kExitUsage);
  EXPECT_EQ(mk({"check", "--suite", "zzkk", "--grid", "mu=2;nu=1"}).code, kExitUsage);
}

TEST(Dist, Actions) {
  const Outcome m = mk({"dist", "moments", "--format", "csv", "--tol", "1e-12"});
  ASSERT_EQ(m.code, kExitOk) << m.err;
  const auto moments = records_from_csv(m.out);
  ASSERT_EQ(moments.size(), 2u);
  EXPECT_EQ(moments[0].quantity, "mean");
  EXPECT_EQ(moments[1].quantity, "variance");

  const Outcome p = mk({"dist", "pmf", "1", "--format", "csv", "--tol", "1e-12"});
  ASSERT_EQ(p.code, kExitOk) << p.err;
  EXPECT_NEAR(records_from_csv(p.out)[0].value, 0.25 / kNorm, 1e-11);

  const Outcome c = mk({"dist", "cf", "0", "--format", "csv", "--alpha", "2", "--beta", "1", "--mu",
                    "2"});
  ASSERT_EQ(c.code, kExitOk) << c.err;
  const auto cf = records_from_csv(c.out);
  EXPECT_TRUE(cf[0].is_complex);
  EXPECT_NEAR(cf[0].value, 1.0, cf[0].error_bound + 1e-15);
  EXPECT_NEAR(cf[0].value_im, 0.0, cf[0].error_bound + 1e-15);

  const Outcome ci = mk({"dist", "cf", "1", "--method", "integral", "--beta", "1", "--mu", "2"});
  EXPECT_EQ(ci.code, kExitOk) << ci.err;
  EXPECT_EQ(mk({"dist", "cdf", "0"}).code, kExitUsage);
  EXPECT_EQ(mk({"dist", "cdf", "3"}).code, kExitOk);
  EXPECT_EQ(mk({"dist", "pmf", "0"}).code, kExitUsage);
  EXPECT_EQ(mk({"dist", "moments", "--mu", "1.5"}).code, kExitUsage);
}

TEST(Dist, SampleDeterministic) {
  const Outcome a = mk({"dist", "sample", "10", "--seed", "7"});
  const Outcome b = mk({"dist", "sample", "10", "--seed", "7"});
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  std::istringstream in(a.out);
  int lines = 0;
  for (std::string line; std::getline(in, line);) {
    EXPECT_GE(std::stoll(line), 1);
    ++lines;
  }
  EXPECT_EQ(lines, 10);
  EXPECT_NE(a.out, mk({"dist", "sample", "10", "--seed", "8"}).out);
}

TEST(RoundTrip, RecordsByteIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"eval", "--r", "1"},
           {"compare", "--methods", "series,theorem1,theorem2", "--r", "1"},
           {"dist", "moments"},
           {"dist", "cf", "0.5", "--beta", "1", "--mu", "2"}}) {
    for (const char* fmt : {"csv", "json"}) {
      auto a = args;
      a.insert(a.end(), {"--format", fmt});
      const Outcome r = mk(a);
      ASSERT_LE(r.code, kExitFailure) << r.err;
      if (std::string(fmt) == "csv") {
        EXPECT_EQ(to_csv(records_from_csv(r.out)), r.out);
      } else {
        EXPECT_EQ(to_json(records_from_json(r.out)), r.out);
      }
    }
  }
}

TEST(RoundTrip, ReportsByteIdentical) {
  const Outcome c = mk({"check", "--suite", "mm", "--format", "csv"});
  EXPECT_EQ(to_csv(reports_from_csv(c.out)), c.out);
  const Outcome j = mk({"check", "--suite", "mm", "--format", "json"});
  EXPECT_EQ(to_json(reports_from_json(j.out)), j.out);
}

TEST(RoundTrip, QuotingAndNonFinite) {
  OutputRecord rec;
  rec.command = "eval";
  rec.quantity = "S";
  rec.method = "odd, \"quoted\" method";
  rec.sequence = "n^1";
  rec.inputs = {{"r", 0.1}, {"z", -1}};
  rec.value = NAN;
  rec.error_bound = INFINITY;
  rec.status = "error: line one\nline two";
  const std::vector<OutputRecord> v{rec};
  const std::string csv = to_csv(v);
  EXPECT_EQ(to_csv(records_from_csv(csv)), csv);
  const std::string json = to_json(v);
  EXPECT_EQ(to_json(records_from_json(json)), json);
  const auto back = records_from_csv(csv);
  EXPECT_EQ(back[0].method, rec.method);
  EXPECT_EQ(back[0].status, rec.status);
  EXPECT_TRUE(std::isnan(back[0].value));
}

TEST(Determinism, IdenticalAcrossRuns) {
  const Outcome a = mk({"dist", "moments", "--format", "csv"});
  const Outcome b = mk({"dist", "moments", "--format", "csv"});
  EXPECT_EQ(to_csv(without_time(records_from_csv(a.out))),
            to_csv(without_time(records_from_csv(b.out))));
  const Outcome c = mk({"check", "--suite", "zzkk", "--format", "csv", "--jobs", "1"});
  const Outcome d = mk({"check", "--suite", "zzkk", "--format", "csv", "--jobs", "4"});
  EXPECT_EQ(c.out, d.out);
}
