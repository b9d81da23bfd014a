#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "rrca/error.hpp"
#include "rrca/regression.hpp"
#include "rrca/report.hpp"

using namespace rrca;

namespace {

struct CliRun {
  int code = 0;
  std::string out;
};

CliRun run_cli(const std::string& args) {
  std::string cmd = std::string(RRCA_CLI_PATH) + " " + args + " 2>&1";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return {-1, ""};
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const CheckEntry* find_check(const ReportDocument& d, const std::string& prefix) {
  for (const auto& c : d.checks)
    if (c.name.rfind(prefix, 0) == 0) return &c;
  return nullptr;
}

}  // namespace

TEST(Report, JobValidation) {
  using P = std::vector<std::pair<std::string, std::string>>;
  EXPECT_THROW(make_job(GroupFamily::dihedral, 4, {}, false, DualAction::contract, {Computation::group}), MathError);
  EXPECT_THROW(make_job(GroupFamily::cyclic, 26, {}, false, DualAction::contract, {Computation::group}), MathError);
  EXPECT_THROW(make_job(GroupFamily::dihedral, 5, P{{"b", "1"}}, false, DualAction::contract, {Computation::group}),
               MathError);
  EXPECT_THROW(make_job(GroupFamily::cyclic, 3, P{{"k3", "1"}}, false, DualAction::contract, {Computation::group}),
               MathError);
  EXPECT_THROW(make_job(GroupFamily::cyclic, 3, P{{"k1", "1"}}, true, DualAction::contract, {Computation::group}),
               MathError);
  EXPECT_THROW(make_job(GroupFamily::dihedral, 6, {}, false, DualAction::paper_cyclic, {Computation::group}),
               MathError);
  EXPECT_THROW(make_job(GroupFamily::cyclic, 3, P{{"k1", "1/0"}}, false, DualAction::contract, {Computation::group}),
               ParseError);
  JobSpec j = make_job(GroupFamily::cyclic, 4, P{{"k2", "1/2"}}, false, DualAction::contract, {Computation::simples});
  EXPECT_FALSE(j.generic);
  ASSERT_EQ(j.parameters.size(), 3u);
  EXPECT_EQ(j.parameters[0].second, Rat(0));
  EXPECT_EQ(j.parameters[1].second, Rat(1, 2));
  EXPECT_TRUE(make_job(GroupFamily::cyclic, 4, {}, false, DualAction::contract, {Computation::simples}).generic);
}

TEST(Report, ComputationNames) {
  for (auto c : {Computation::group, Computation::coinv, Computation::verma, Computation::simples,
                 Computation::families, Computation::decomp, Computation::schur, Computation::chartable,
                 Computation::report})
    EXPECT_EQ(parse_computation(computation_name(c)), c);
  EXPECT_THROW(parse_computation("bogus"), ParseError);
}

TEST(Report, LaurentMapRoundTrip) {
  LaurentQ l = LaurentQ::monomial(-2, Rat(3, 4)) + LaurentQ::monomial(5);
  EXPECT_EQ(laurent_from_map(laurent_map(l)), l);
  EXPECT_EQ(laurent_map(l).at("-2"), "3/4");
}

TEST(Report, FullReportOddDihedral) {
  using P = std::vector<std::pair<std::string, std::string>>;
  JobSpec j = make_job(GroupFamily::dihedral, 5, P{{"a", "1"}}, false, DualAction::contract, {Computation::report});
  ReportDocument d = run_job(j);
  EXPECT_EQ(d.regime, "generic");
  EXPECT_TRUE(d.all_checks_passed());
  for (const auto& c : d.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  ASSERT_TRUE(d.group && d.coinv && d.simples && d.decomposition);
  EXPECT_EQ(d.group->order, 10);
  EXPECT_EQ(d.coinv->basis_size, 10);
  EXPECT_EQ(d.verma.size(), 4u);
  EXPECT_FALSE(d.families.empty());
  ASSERT_NE(find_check(d, "Jacobson"), nullptr);
}

TEST(Report, JsonRoundTripAndDeterminism) {
  JobSpec j = make_job(GroupFamily::cyclic, 3, {}, false, DualAction::paper_cyclic, {Computation::report});
  ReportDocument d = run_job(j);
  std::string text = to_json_string(d);
  EXPECT_EQ(from_json_string(text), d);
  EXPECT_EQ(to_json_string(run_job(j)), text);
  auto parsed = nlohmann::json::parse(text);
  EXPECT_EQ(parsed["schema"], 1);
  EXPECT_TRUE(parsed.contains("schur"));
  EXPECT_TRUE(parsed.contains("chartable"));
  EXPECT_THROW(from_json_string("{not json"), std::exception);
}

TEST(Report, TextRendering) {
  JobSpec j = make_job(GroupFamily::dihedral, 6, {{"a", "0"}, {"b", "1"}}, false, DualAction::contract,
                       {Computation::families});
  std::string text = render_text(run_job(j));
  EXPECT_NE(text.find("regime: a=0"), std::string::npos);
  EXPECT_NE(text.find("eps1"), std::string::npos);
}

TEST(Regression, UnknownSuiteThrows) { EXPECT_THROW(run_regression("bogus", kDefaultSeed), MathError); }

TEST(Regression, CyclicTable) {
  RegressionResult r = run_regression("cyclic_m3_table", kDefaultSeed);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.cases.size(), 9u);
}

TEST(Cli, Chartable) {
  CliRun r = run_cli("chartable --type cyclic --m 3");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("9*k1^2 - 9*k1*k2"), std::string::npos) << r.out;
}

TEST(Cli, JsonOutput) {
  CliRun r = run_cli("simples --type dihedral --m 5 --a 1 --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["simples"]["modules"].size(), 4u);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("group --type dihedral --m 4").code, 2);
  EXPECT_NE(run_cli("group --type dihedral --m 4").out.find("outside supported range"), std::string::npos);
  EXPECT_EQ(run_cli("simples --type cyclic --m 3 --k1 1/0").code, 2);
  EXPECT_EQ(run_cli("simples --type cyclic --m 3 --k1 x").code, 2);
  EXPECT_EQ(run_cli("group --type cyclic").code, 2);
  EXPECT_EQ(run_cli("frobnicate").code, 2);
  EXPECT_EQ(run_cli("group --type dihedral --m 5 --b 1").code, 2);
  EXPECT_EQ(run_cli("regression no_such_suite").code, 2);
  EXPECT_EQ(run_cli("regression cyclic_m3_table").code, 0);
  EXPECT_EQ(run_cli("group --type cyclic --m 4").code, 0);
}

TEST(Cli, SeedHandling) {
  CliRun a = run_cli("simples --type cyclic --m 3 --generic --format json");
  CliRun b = run_cli("simples --type cyclic --m 3 --generic --format json");
  EXPECT_EQ(a.out, b.out);
  CliRun bad = run_cli("group --type cyclic --m 3 --seed-is-not-a-flag");
  EXPECT_EQ(bad.code, 2);
  std::string env = "RRCA_SEED=abc ";
  std::string cmd = env + RRCA_CLI_PATH + " group --type cyclic --m 3 >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}
