#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <sstream>
#include <sys/wait.h>

#include "tribo/cli.hpp"

using namespace tribo;
using nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

ordered_json run_json(std::vector<std::string> args) {
  args.insert(args.end(), {"--format", "json"});
  const Run r = run(args);
  REQUIRE(r.code == kExitOk);
  return ordered_json::parse(r.out);
}

std::string verdict(const ordered_json& doc, const std::string& name) {
  for (const auto& v : doc["verdicts"]) {
    if (v["name"] == name) return v["value"].is_string() ? v["value"].get<std::string>() : v["value"].dump();
  }
  return "<missing>";
}

Run run_binary(const std::string& args) {
  const std::string cmd = std::string(TRIBO_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

std::vector<std::string> column(const ordered_json& doc, const std::string& key) {
  std::vector<std::string> out;
  for (const auto& row : doc["rows"]) out.push_back(row[key].is_string() ? row[key].get<std::string>() : row[key].dump());
  return out;
}

}  // namespace

TEST_CASE("sequence command") {
  const auto trib = run_json({"sequence", "--kind", "tribonacci", "--from", "0", "--to", "6"});
  CHECK(column(trib, "value") == std::vector<std::string>{"0/1", "1/1", "1/1", "2/1", "4/1", "7/1", "13/1"});

  const auto jac = run_json({"sequence", "--rst", "1,1,2", "--from", "0", "--to", "4"});
  CHECK(column(jac, "value") == std::vector<std::string>{"0/1", "1/1", "1/1", "2/1", "5/1"});

  const auto back = run_json({"sequence", "--rst", "1,1,1", "--from", "-3", "--to", "0"});
  CHECK(column(back, "value") == std::vector<std::string>{"-1/1", "1/1", "0/1", "0/1"});

  CHECK(run({"sequence", "--rst", "1,1,0", "--from", "-3", "--to", "2"}).code == kExitInputError);
  CHECK(run({"sequence", "--rst", "1,1", "--from", "0", "--to", "2"}).code == kExitInputError);
  CHECK(run({"sequence", "--kind", "fibonacci"}).code == kExitInputError);
}

TEST_CASE("orbit command") {
  const auto it = run_json({"orbit", "-a", "1", "-b", "1", "-g", "1", "--x-1", "1", "--x0", "1", "-n", "2"});
  CHECK(column(it, "x") == std::vector<std::string>{"1/3", "3/5"});

  const auto cmp = run_json({"orbit", "-a", "1", "-b", "1", "-g", "1", "--x-1", "1", "--x0", "1", "-n", "50",
                             "--mode", "compare"});
  CHECK(verdict(cmp, "agree") == "50/50");
  CHECK(verdict(cmp, "all_agree") == "true");

  const auto sing = run_json({"orbit", "-a", "1", "-b", "1", "-g", "1", "--x-1", "0", "--x0", "-1", "-n", "5"});
  CHECK(verdict(sing, "singular_at") == "1");
  CHECK(verdict(sing, "status") == "singular at n=1");

  const auto closed = run_json({"orbit", "-a", "1/2", "-b", "1/2", "-g", "1/2", "--x-1", "2", "--x0", "1/3",
                                "-n", "10", "--mode", "closed"});
  const auto iterated = run_json({"orbit", "-a", "1/2", "-b", "1/2", "-g", "1/2", "--x-1", "2", "--x0", "1/3",
                                  "-n", "10"});
  CHECK(column(closed, "x") == column(iterated, "x"));
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run({"stability", "-a", "1", "-b", "1", "-g", "0"}).code == kExitInputError);
  CHECK(run({"stability", "-a", "-1", "-b", "1", "-g", "1"}).code == kExitInputError);
  CHECK(run({"stability", "-a", "x", "-b", "1", "-g", "1"}).code == kExitInputError);
  CHECK(run({"orbit", "-a", "1", "-b", "1"}).code == kExitInputError);
  CHECK(run({"orbit", "-a", "1", "-b", "1", "-g", "1", "--mode", "fast"}).code == kExitInputError);
  CHECK(run({"frobnicate"}).code == kExitInputError);
  CHECK(run({"sweep", "--alpha", "1", "--beta", "1", "--gamma", "-1:1", "--steps", "3", "--permissive"}).code ==
        kExitInputError);
  const Run bad = run({"stability", "-a", "1", "-b", "1", "-g", "0"});
  CHECK(bad.err.find("error") != std::string::npos);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("permissive mode accepts negative parameters with a warning") {
  const auto doc = run_json({"stability", "-a", "-1/2", "-b", "1", "-g", "1", "--permissive"});
  CHECK(verdict(doc, "warning") != "<missing>");
}

TEST_CASE("stability command") {
  const auto unit = run_json({"stability", "-a", "1", "-b", "1", "-g", "1"});
  REQUIRE(unit["rows"].size() == 1);
  const auto& row = unit["rows"][0];
  CHECK(row["mu"].get<double>() == doctest::Approx(0.5436890127).epsilon(1e-9));
  CHECK(row["clark_sum"].get<double>() == doctest::Approx(0.6170242321).epsilon(1e-9));
  CHECK(row["mu_phi"].get<double>() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(row["classification"] == "LocallyAsymptoticallyStable");

  const auto circle = run_json({"stability", "-a", "0", "-b", "0", "-g", "1"});
  CHECK(circle["rows"][0]["clark_sum"].get<double>() == doctest::Approx(2.0));
  CHECK(circle["rows"][0]["classification"] == "Inconclusive");
  CHECK(circle["rows"][0]["local_verdict"] == "nonhyperbolic");

  const auto half = run_json({"stability", "-a", "0.5", "-b", "0.5", "-g", "0.5"});
  CHECK(half["rows"][0]["mu"].get<double>() == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("forbidden command") {
  const auto zero = run_json({"forbidden", "-a", "1", "-b", "1", "-g", "1", "--x-1", "3", "--x0", "0",
                              "--horizon", "20"});
  CHECK(verdict(zero, "formula_index") == "-1");
  CHECK(verdict(zero, "operational_index") == "null");

  const auto both = run_json({"forbidden", "-a", "1", "-b", "1", "-g", "1", "--x-1", "0", "--x0", "-1",
                              "--horizon", "20"});
  CHECK(verdict(both, "formula_index") == "1");
  CHECK(verdict(both, "operational_index") == "1");

  const auto none = run_json({"forbidden", "-a", "1", "-b", "1", "-g", "1", "--x-1", "1", "--x0", "1",
                              "--horizon", "100"});
  CHECK(verdict(none, "formula_index") == "null");
  CHECK(verdict(none, "operational_index") == "null");
}

TEST_CASE("sweep command") {
  const auto grid = run_json({"sweep", "--alpha", "0.5:1.5", "--beta", "0.5:1.5", "--gamma", "1", "--steps", "3,3,1"});
  REQUIRE(grid["rows"].size() == 9);
  CHECK(column(grid, "alpha") ==
        std::vector<std::string>{"1/2", "1/2", "1/2", "1/1", "1/1", "1/1", "3/2", "3/2", "3/2"});
  for (const auto& row : grid["rows"]) CHECK(row["clark_sum"].get<double>() > 0);

  const auto single = run_json({"sweep", "--alpha", "1", "--beta", "1", "--gamma", "1"});
  const auto stab = run_json({"stability", "-a", "1", "-b", "1", "-g", "1"});
  REQUIRE(single["rows"].size() == 1);
  auto point = single["rows"][0];
  for (const char* key : {"alpha", "alpha_decimal", "beta", "beta_decimal", "gamma", "gamma_decimal"}) {
    point.erase(key);
  }
  CHECK(point == stab["rows"][0]);

  const auto threaded = run_json({"sweep", "--alpha", "0.5:1.5", "--beta", "0.5:1.5", "--gamma", "0.1:1",
                                  "--steps", "3", "--threads", "3", "--convergence"});
  const auto serial = run_json({"sweep", "--alpha", "0.5:1.5", "--beta", "0.5:1.5", "--gamma", "0.1:1",
                                "--steps", "3", "--threads", "1", "--convergence"});
  CHECK(threaded["rows"] == serial["rows"]);
}

TEST_CASE("grid axes") {
  const auto pts = parse_axis("0.5:1.5", 3).points();
  CHECK(pts == std::vector<Rational>{Rational(1, 2), Rational(1), Rational(3, 2)});
  CHECK(parse_axis("2/3", 1).points() == std::vector<Rational>{Rational(2, 3)});
  CHECK_THROWS_AS(parse_axis("1:", 2), std::invalid_argument);
}

TEST_CASE("selftest command") {
  const Run r = run({"selftest", "--seed", "7", "--count", "20", "-n", "30", "--format", "json"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == run({"selftest", "--seed", "7", "--count", "20", "-n", "30", "--format", "json"}).out);
}

TEST_CASE("output is byte-identical across runs") {
  const std::vector<std::vector<std::string>> commands = {
      {"orbit", "-a", "1", "-b", "1", "-g", "1", "--x-1", "1", "--x0", "1", "-n", "30", "--mode", "compare"},
      {"stability", "-a", "1", "-b", "1", "-g", "1"},
      {"forbidden", "-a", "1", "-b", "1", "-g", "1", "--x-1", "3", "--x0", "0"},
      {"sequence", "--kind", "padovan", "--from", "-5", "--to", "20"},
  };
  for (const auto& cmd : commands) {
    for (const char* fmt : {"human", "csv", "json"}) {
      auto args = cmd;
      args.insert(args.end(), {"--format", fmt});
      CHECK(run(args).out == run(args).out);
    }
  }
}

TEST_CASE("installed binary") {
  const Run ok = run_binary("orbit -a 1 -b 1 -g 1 --x-1 1 --x0 1 -n 50 --mode compare --format json");
  CHECK(ok.code == 0);
  CHECK(ok.out == run({"orbit", "-a", "1", "-b", "1", "-g", "1", "--x-1", "1", "--x0", "1", "-n", "50", "--mode",
                       "compare", "--format", "json"})
                      .out);
  CHECK(run_binary("stability -a 1 -b 1 -g 0").code == 2);
  CHECK(run_binary("sequence --rst 1,1,0 --from -3 --to 2").code == 2);
}
