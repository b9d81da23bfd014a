// rrca: command-line front end for restricted rational Cherednik algebra computations.
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <json.hpp>

#include "rrca/error.hpp"
#include "rrca/regression.hpp"
#include "rrca/report.hpp"

namespace {

enum Exit { kOk = 0, kComputation = 1, kParse = 2, kRegression = 3 };

struct Options {
  std::string type = "cyclic";
  int m = 0;
  std::string a, b;
  std::map<int, std::string> k;
  bool generic = false;
  std::string format = "text";
  std::string out;
  std::string dual = "contract";
  std::string suite;
};

std::uint64_t seed_from_env() {
  const char* s = std::getenv("RRCA_SEED");
  if (!s || !*s) return rrca::kDefaultSeed;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (*end) throw rrca::ParseError(std::string("RRCA_SEED is not an unsigned integer: '") + s + "'", static_cast<int>(end - s));
  return v;
}

void add_job_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--type", o.type, "Group family")->check(CLI::IsMember({"cyclic", "dihedral"}));
  cmd->add_option("--m", o.m, "Group order parameter")->required();
  cmd->add_option("--a", o.a, "Dihedral parameter c(t) (c for odd m)");
  cmd->add_option("--b", o.b, "Dihedral parameter c(s), even m only");
  for (int i = 1; i <= rrca::kMaxVars; ++i)
    cmd->add_option("--k" + std::to_string(i), o.k[i], "Cyclic parameter k_" + std::to_string(i));
  cmd->add_flag("--generic", o.generic, "Keep parameters symbolic");
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", o.out, "Write output to this file");
  cmd->add_option("--dual-action", o.dual, "Cyclic action convention")->check(CLI::IsMember({"contract", "paper-cyclic"}));
}

int emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream f(o.out);
  if (!f) {
    std::cerr << "error: cannot write " << o.out << "\n";
    return kComputation;
  }
  f << text;
  return kOk;
}

rrca::JobSpec job_from(const Options& o, rrca::Computation what, std::uint64_t seed) {
  std::vector<std::pair<std::string, std::string>> params;
  if (!o.a.empty()) params.emplace_back("a", o.a);
  if (!o.b.empty()) params.emplace_back("b", o.b);
  for (const auto& [i, v] : o.k)
    if (!v.empty()) params.emplace_back("k" + std::to_string(i), v);
  auto family = o.type == "cyclic" ? rrca::GroupFamily::cyclic : rrca::GroupFamily::dihedral;
  auto action = o.dual == "contract" ? rrca::DualAction::contract : rrca::DualAction::paper_cyclic;
  return rrca::make_job(family, o.m, params, o.generic, action, {what}, seed);
}

int run_regression(const Options& o, std::uint64_t seed) {
  std::vector<std::string> suites;
  if (o.suite == "all") suites = rrca::regression_suites();
  else suites = {o.suite};
  bool ok = true;
  std::string text;
  nlohmann::json j = nlohmann::json::array();
  for (const auto& id : suites) {
    rrca::RegressionResult r = rrca::run_regression(id, seed);
    ok = ok && r.passed();
    nlohmann::json cases = nlohmann::json::array();
    for (const auto& c : r.cases) {
      text += std::string(c.passed ? "PASS " : "FAIL ") + id + ": " + c.name +
              (c.passed || c.detail.empty() ? "" : " (" + c.detail + ")") + "\n";
      cases.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    text += std::string(r.passed() ? "PASS " : "FAIL ") + id + " (" + std::to_string(r.cases.size()) + " cases)\n";
    j.push_back({{"suite", id}, {"passed", r.passed()}, {"cases", cases}});
  }
  std::string out = o.format == "json" ? nlohmann::json{{"schema", 1}, {"regression", j}}.dump(2) + "\n" : text;
  int rc = emit(o, out);
  return rc != kOk ? rc : (ok ? kOk : kRegression);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Restricted rational Cherednik algebras of cyclic and dihedral groups"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"group", "Group data, irreducibles and character table"},
      {"coinv", "Coinvariant algebra, Poincare series and fake degrees"},
      {"verma", "Baby Verma modules and relation checks"},
      {"simples", "Simple heads: dimensions, Poincare series, graded characters"},
      {"families", "Euler and Calogero-Moser families"},
      {"decomp", "Graded decomposition matrix"},
      {"schur", "Schur elements (cyclic)"},
      {"chartable", "Character table of the restricted algebra (cyclic)"},
      {"report", "Everything above"}};
  for (const auto& [name, help] : commands) add_job_options(app.add_subcommand(name, help), o);
  CLI::App* reg = app.add_subcommand("regression", "Run an embedded regression suite");
  reg->add_option("suite", o.suite, "Suite id or 'all'")->required();
  reg->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  reg->add_option("--out", o.out, "Write output to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  std::uint64_t seed;
  try {
    seed = seed_from_env();
  } catch (const rrca::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }

  if (reg->parsed()) {
    const auto& ids = rrca::regression_suites();
    if (o.suite != "all" && std::find(ids.begin(), ids.end(), o.suite) == ids.end()) {
      std::cerr << "error: unknown suite id '" << o.suite << "'\n";
      return kParse;
    }
    try {
      return run_regression(o, seed);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kComputation;
    }
  }

  rrca::JobSpec job;
  try {
    std::string name = app.get_subcommands().front()->get_name();
    job = job_from(o, rrca::parse_computation(name), seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
  try {
    rrca::ReportDocument doc = rrca::run_job(job);
    int rc = emit(o, o.format == "json" ? rrca::to_json_string(doc) : rrca::render_text(doc));
    if (rc != kOk) return rc;
    return doc.all_checks_passed() ? kOk : kComputation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputation;
  }
}
