#include "cli/acceptance.hpp"
#include "cli/commands.hpp"
#include "cli/constants.hpp"
#include "cli/tables.hpp"
#include "nsz/errors.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using namespace nsz;
using namespace nsz::cli;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "nsz");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Constants, ReferenceKinds) {
  auto full4 = *find_reference("PHP_DUAL_OPTIMA", "full", 4);
  EXPECT_TRUE(full4.matches(make_rational(2737, 66)));
  EXPECT_FALSE(full4.matches(make_rational(2738, 66)));
  auto r6 = *find_reference("PHP_DUAL_OPTIMA", "restricted", 6);
  EXPECT_TRUE(r6.matches(make_rational(1175, 4)));
  auto lb6 = *find_reference("PHP_D_VALUES", "lower_bound", 6);
  EXPECT_TRUE(lb6.matches_decimal("6.400"));
  EXPECT_FALSE(lb6.matches_decimal("6.401"));
  auto d6 = *find_reference("PHP_D_VALUES", "value_of_D", 6);
  EXPECT_TRUE(d6.matches(make_rational(18750, 89)));
  EXPECT_FALSE(find_reference("ORD_OPTIMA", "full", 7).has_value());
}

TEST(Tables, RenderingIsDeterministic) {
  TableSpec spec;
  spec.id = TableId::PhpDValues;
  spec.n_min = 3;
  spec.n_max = 5;
  spec.threads = 3;
  auto a = reproduce_table(spec);
  auto b = reproduce_table(spec);
  EXPECT_EQ(render_csv(a), render_csv(b));
  EXPECT_EQ(render_markdown(a), render_markdown(b));
  EXPECT_EQ(render_json(a), render_json(b));
  EXPECT_TRUE(a.all_match());
}

TEST(Tables, CellsCarryExactValues) {
  TableSpec spec;
  spec.id = TableId::OrdOptima;
  spec.n_min = 3;
  spec.n_max = 5;
  auto t = reproduce_table(spec);
  ASSERT_EQ(t.cells.size(), 3u);
  for (const auto& c : t.cells) {
    EXPECT_EQ(c.status, "ok");
    EXPECT_EQ(parse_rational(c.exact), (1 << c.n) - c.n);
    EXPECT_EQ(to_decimal(parse_rational(c.exact), 3), c.decimal);
    EXPECT_TRUE(c.match.value_or(false));
  }
}

TEST(Tables, CapsAndBudgets) {
  TableSpec spec;
  spec.id = TableId::PhpDualOptima;
  spec.n_min = 3;
  spec.n_max = 7;
  EXPECT_THROW(validate(spec), ParameterError);
  spec.n_max = 5;
  spec.columns = {"full"};
  EXPECT_THROW(validate(spec), ParameterError);
  spec.columns = {};
  spec.cell_budget = std::chrono::seconds(0);
  auto t = reproduce_table(spec);
  for (const auto& c : t.cells) {
    if (c.column == "full" && c.n == 5) EXPECT_EQ(c.status, "n/a");
    else EXPECT_EQ(c.status, "skipped") << c.column << c.n;
  }
}

TEST(Cli, UsageErrorsExitWithTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"table"}).code, 2);
  EXPECT_EQ(run({"table", "NOT_A_TABLE"}).code, 2);
  EXPECT_EQ(run({"table", "ORD_OPTIMA", "--n-range", "3..9"}).code, 2);
  EXPECT_EQ(run({"lp", "solve", "--family", "php", "--n", "3", "--side", "both"}).code, 2);
}

TEST(Cli, TableOutputFormats) {
  auto csv = run({"table", "ORD_RESTRICTED", "--n-range", "3..4", "--format", "csv"});
  EXPECT_EQ(csv.code, 0);
  EXPECT_EQ(csv.out,
            "table,n,column,status,exact,decimal,reference,match\n"
            "ORD_RESTRICTED,3,no_minimum,ok,2,2.000,2,yes\n"
            "ORD_RESTRICTED,4,no_minimum,ok,8,8.000,8,yes\n");
  auto md = run({"table", "php_dual_optima", "--n-range", "3..3"});
  EXPECT_EQ(md.code, 0);
  EXPECT_NE(md.out.find("| 3 | 11.000 (11) ok | 6.000 (6) ok |"), std::string::npos);
}

TEST(Cli, SolveWritesResultAndWitness) {
  auto dir = std::filesystem::temp_directory_path() / "nsz_cli_test";
  std::filesystem::create_directories(dir);
  auto out = (dir / "r.json").string();
  auto r = run({"lp", "solve", "--family", "ord", "--n", "4", "--mode", "restricted", "--side", "primal", "--out", out});
  ASSERT_EQ(r.code, 0) << r.err;
  auto v = run({"verify", "--in", out + ".witness.json", "--support", "restricted"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("\"valid\": true"), std::string::npos);
  auto lifted = (dir / "lifted.json").string();
  EXPECT_EQ(run({"ord", "restrict", "--in", out + ".witness.json", "--out", lifted}).code, 0);
  EXPECT_EQ(run({"verify", "--in", lifted}).code, 0);
  auto bad = run({"verify", "--in", out + ".witness.json"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("\"witness\""), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Cli, DualReport) {
  auto r = run({"php", "dual-report", "--n", "5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"dual_value\": \"64\""), std::string::npos);
  EXPECT_NE(r.out.find("\"lower_bound_decimal\": \"4.382\""), std::string::npos);
  EXPECT_NE(r.out.find("\"conjecture_match\": true"), std::string::npos);
}

TEST(Acceptance, MissingWitnessFileIsReportedPerCriterion) {
  AcceptanceOptions opts;
  opts.witness_path = "/nonexistent/ord4_restricted.json";
  auto report = run_criterion(9, opts);
  EXPECT_FALSE(report.passed());
  ASSERT_EQ(report.checks.size(), 1u);
  EXPECT_NE(report.checks[0].detail.find("cannot open"), std::string::npos);
  EXPECT_EQ(run_criterion(4, opts).passed(), true);
}

TEST(Acceptance, QuickLevelLeavesStretchChecksUnrun) {
  AcceptanceOptions opts;
  auto report = run_criterion(2, opts);
  ASSERT_EQ(report.checks.size(), 4u);
  EXPECT_EQ(report.checks[3].status, "not run");
  EXPECT_TRUE(report.passed());
  EXPECT_NE(report.summary_line().find("criterion 2: PASS"), std::string::npos);
}

TEST(Acceptance, UnknownCriterion) { EXPECT_THROW(run_criterion(12, {}), ParameterError); }
