#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "isoprofile/config.hpp"
#include "isoprofile/errors.hpp"
#include "isoprofile/experiments.hpp"
#include "isoprofile/graph_spec.hpp"
#include "isoprofile/report.hpp"
#include "isoprofile/scaling.hpp"

using namespace isoprofile;

namespace {

struct Run {
  int code;
  std::string out;
  std::string log;
};

Run run(const std::string& command, const std::map<std::string, std::string>& keys) {
  Config cfg;
  for (const auto& [k, v] : keys) cfg.set(k, v);
  std::ostringstream out, log;
  const int code = run_command(command, cfg, out, log);
  return {code, out.str(), log.str()};
}

}  // namespace

TEST_CASE("config parsing") {
  const auto cfg = Config::parse("graph = torus:4,4  # comment\nn=3\n[audit]\nlambdas = 1, 2.5 ,4\n; note\n");
  CHECK(*cfg.get("graph") == "torus:4,4");
  CHECK(*cfg.get_int("n") == 3);
  CHECK(cfg.get_double_list("audit.lambdas") == std::vector<double>{1.0, 2.5, 4.0});
  CHECK(!cfg.get("lambdas"));
  CHECK_THROWS_AS(Config::parse("graph torus"), ParseError);
  CHECK_THROWS_AS(Config::parse("[audit\n"), ParseError);
  try {
    Config::parse("a = 1\n\nbroken\n");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(cfg.get_double("graph"), DomainError);
}

TEST_CASE("graph specs") {
  CHECK(build_graph("torus:16,16").graph.vertex_count() == 256);
  CHECK(build_graph("cycle:12").orbit_pairs.size() == 1);
  CHECK(build_graph("complete:2").graph.edge_count() == 1);
  CHECK(build_graph("hypercube:3").graph.edge_count() == 12);
  CHECK(build_graph("lamplighter:3").orbit_pairs.size() == 2);
  const auto rr = build_graph("random-regular:20,3,1");
  CHECK(!rr.transitive());
  CHECK(rr.graph.edges() == build_graph("random-regular:20,3").graph.edges());
  CHECK_THROWS_AS(build_graph("bogus:3"), UsageError);
  CHECK_THROWS_AS(build_graph("torus"), UsageError);
  CHECK_THROWS_AS(build_graph("torus:4,x"), UsageError);
  CHECK(parse_pair("3,7") == Edge{3, 7});
}

TEST_CASE("scaling fit") {
  std::vector<std::pair<double, double>> series;
  for (int n = 4; n <= 128; n *= 2) series.emplace_back(n, 3.0 * std::pow(n, -0.5));
  const auto fit = fit_power_law(series);
  CHECK(std::abs(fit.exponent + 0.5) <= 1e-9);
  CHECK(std::abs(fit.intercept - std::log(3.0)) <= 1e-9);
  CHECK(fit.residual <= 1e-12);
  series.emplace_back(256, 0.0);
  CHECK(fit_power_law(series).series.size() == 6);
  CHECK_THROWS_AS(fit_power_law({{1, 1}, {2, 2}, {4, 3}, {8, 0}}), DegeneracyError);
  CHECK_THROWS_AS(fit_power_law({{2, 1}, {2, 2}, {2, 3}, {2, 4}, {2, 5}}), DegeneracyError);
}

TEST_CASE("profile command") {
  const auto r = run("profile", {{"graph", "complete:2"}, {"n", "5"}});
  CHECK(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(lines, line))
    if (!line.empty() && line[0] != '#') rows.push_back(line);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == "m,tv,dstar,hstar");
  for (int m = 1; m <= 5; ++m) CHECK(rows[m + 1].rfind(std::to_string(m) + ",0,", 0) == 0);
  CHECK(r.out.find("seed=1") != std::string::npos);

  CHECK(run("profile", {{"graph", "bogus:2"}, {"n", "5"}}).code == kExitUsage);
  CHECK(run("profile", {{"n", "5"}}).code == kExitUsage);
  CHECK(run("nonsense", {{"graph", "complete:2"}}).code == kExitUsage);
}

TEST_CASE("torus profile with transitive hint is monotone") {
  const auto r = run("profile", {{"graph", "torus:16,16"}, {"n", "100"}, {"format", "json"}});
  REQUIRE(r.code == kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(j["tv_scope"] == "hinted-pairs");
  const auto& rows = j["profile"];
  for (std::size_t m = 1; m < rows.size(); ++m)
    CHECK(rows[m]["tv"].get<double>() <= rows[m - 1]["tv"].get<double>() + 1e-12);
}

TEST_CASE("curvature command") {
  const auto q3 = run("curvature", {{"graph", "hypercube:3"}});
  REQUIRE(q3.code == kExitOk);
  CHECK(Json::parse(q3.out)["summary"]["nonneg"] == true);
  const auto c4 = Json::parse(run("curvature", {{"graph", "cycle:4"}}).out);
  for (const auto& e : c4["edges"]) {
    CHECK(e["ric_num"] == "1");
    CHECK(e["ric_den"] == "2");
  }
  CHECK(run("curvature", {{"graph", "random-regular:20,3,1"}}).code == kExitOk);
  CHECK(run("curvature", {{"graph", "torus:8,8"}, {"budget", "10"}}).code == kExitBudget);
}

TEST_CASE("partition command") {
  const auto k2 = run("partition", {{"graph", "complete:2"}, {"n", "1"}});
  CHECK(k2.code == kExitOk);
  const auto j = Json::parse(k2.out);
  CHECK(j["certificate"]["pass"] == true);
  CHECK(j["certificate"]["cell"]["ratio"] == 0.0);
  CHECK(j["seed"] == 1);
  const auto expander = run("partition", {{"graph", "random-regular:200,3,1"}, {"n", "10"}});
  CHECK(expander.code == kExitOk);
  CHECK(!Json::parse(expander.out)["certificate"]["notes"].empty());
}

TEST_CASE("audit command") {
  const auto c6 = run("audit", {{"graph", "cycle:6"}, {"n", "8"}});
  CHECK(c6.code == kExitOk);
  const auto j = Json::parse(c6.out);
  CHECK(j["pass"] == true);
  CHECK(j["audits"].size() == default_audit_suite().size());
  for (const auto& a : j["audits"]) CHECK(a["status"] == "pass");

  const auto green = run("audit", {{"graph", "complete:2"},
                                   {"n", "10"},
                                   {"audits", "supermultiplicativity,info-green,tail-info-green"},
                                   {"t", "2,4,8"}});
  CHECK(green.code == kExitOk);

  const auto empty = run("audit", {{"graph", "complete:2"}, {"audits", ""}});
  CHECK(empty.code == kExitOk);
  CHECK(Json::parse(empty.out)["audits"].empty());

  const auto big = run("audit", {{"graph", "torus:9,9"}, {"n", "4"}, {"audits", "curvature-isoperimetry,tv-monotone"}});
  CHECK(big.code == kExitOk);
  CHECK(Json::parse(big.out)["audits"][0]["status"] == "skipped");
  CHECK(run("audit", {{"graph", "complete:2"}, {"audits", "no-such-audit"}}).code == kExitUsage);
}

TEST_CASE("scaling command") {
  const auto r = run("scaling", {{"graph", "torus:40,40"}, {"n", "64"}, {"quantity", "tv"}});
  CHECK(r.code == kExitOk);
  const auto j = Json::parse(r.out);
  CHECK(j["fit"]["series"].size() == 5);
  CHECK(run("scaling", {{"graph", "torus:40,40"}, {"n", "16"}}).code == kExitAssertion);
  CHECK(run("scaling", {{"graph", "torus:40,40"}, {"n", "64"}, {"expect", "3"}}).code == kExitAssertion);
}

TEST_CASE("outputs are byte identical and written atomically") {
  const auto dir = std::filesystem::temp_directory_path() / "isoprofile-test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "cert.json").string();
  std::map<std::string, std::string> keys{{"graph", "torus:8,8"}, {"n", "6"}, {"seed", "77"}, {"out", path}};
  REQUIRE(run("partition", keys).code == kExitOk);
  std::ifstream first_in(path);
  const std::string first((std::istreambuf_iterator<char>(first_in)), {});
  REQUIRE(run("partition", keys).code == kExitOk);
  std::ifstream second_in(path);
  const std::string second((std::istreambuf_iterator<char>(second_in)), {});
  CHECK(first == second);
  CHECK(Json::parse(first)["seed"] == 77);
  CHECK(run("profile", {{"graph", "complete:2"}, {"out", "/nonexistent-dir/x.csv"}}).code == kExitUsage);
  std::filesystem::remove_all(dir);
}
