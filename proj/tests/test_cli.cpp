#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "lue/asymptotics.hpp"
#include "lue/cli.hpp"

using lue::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

struct Csv {
  std::string manifest;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::size_t col(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    FAIL("missing column " << name);
    return 0;
  }
  double num(std::size_t row, const std::string& name) const { return std::stod(rows.at(row).at(col(name))); }
};

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> f;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') cur += '"', ++i;
      else if (c == '"') quoted = false;
      else cur += c;
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      f.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  f.push_back(cur);
  return f;
}

Csv parse_csv(const std::string& text) {
  Csv c;
  std::istringstream is(text);
  std::string line;
  std::getline(is, c.manifest);
  std::getline(is, line);
  c.header = split(line);
  while (std::getline(is, line))
    if (!line.empty()) c.rows.push_back(split(line));
  return c;
}

int run_tool(const std::string& args) {
  const std::string cmd = std::string(LUE_TOOL_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

}  // namespace

TEST_CASE("exact: n = 1 closed form") {
  const auto r = call({"exact", "--n", "1", "--gamma", "0", "--t", "1,2.5"});
  REQUIRE(r.code == 0);
  const auto c = parse_csv(r.out);
  CHECK(c.manifest.rfind("# manifest: {", 0) == 0);
  REQUIRE(c.rows.size() == 2);
  CHECK(c.num(0, "p") == doctest::Approx(1 - std::exp(-1.0)).epsilon(1e-12));
  CHECK(c.num(1, "log_p") == doctest::Approx(std::log(1 - std::exp(-2.5))).epsilon(1e-12));
}

TEST_CASE("number formatting") {
  CHECK(lue::cli::format_double(0.1) == "0.10000000000000001");
  CHECK(std::stod(lue::cli::format_double(std::exp(-1.0))) == std::exp(-1.0));
  CHECK(lue::cli::format_double(std::nan("")) == "nan");
  CHECK(lue::cli::csv_quote("a,b") == "\"a,b\"");
  CHECK(lue::cli::csv_quote("plain") == "plain");
}

TEST_CASE("exact: both routes agree and small-t slope") {
  const auto a = parse_csv(call({"exact", "--n", "4", "--gamma", "1", "--t", "0.5,3,9"}).out);
  const auto b = parse_csv(call({"exact", "--n", "4", "--gamma", "1", "--t", "0.5,3,9", "--method", "hankel"}).out);
  for (std::size_t i = 0; i < 3; ++i)
    CHECK(std::abs(a.num(i, "log_p") - b.num(i, "log_p")) <= 1e-10 * std::max(1.0, std::abs(b.num(i, "log_p"))));

  // ln P ~ n(n+gamma) ln t as t -> 0
  const auto s = parse_csv(call({"exact", "--n", "3", "--gamma", "0.5", "--t", "1e-3,2e-3"}).out);
  const double slope = (s.num(1, "log_p") - s.num(0, "log_p")) / std::log(2.0);
  CHECK(slope == doctest::Approx(3 * 3.5).epsilon(1e-2));
}

TEST_CASE("exact: alpha grid maps to t = 4 n alpha") {
  const auto c = parse_csv(call({"exact", "--n", "5", "--alpha", "0.25"}).out);
  CHECK(c.num(0, "t") == doctest::Approx(5.0));
}

TEST_CASE("asympt: airy tail and lemma") {
  const auto a = parse_csv(call({"asympt", "--formula", "airy-tail", "--s", "2"}).out);
  CHECK(a.num(0, "value") == doctest::Approx(-8.0 / 12 - std::log(2.0) / 8 + lue::asympt::tracy_widom_constant()));
  const auto l = parse_csv(call({"asympt", "--formula", "lemma", "--n", "10", "--gamma", "0", "--alpha", "0.5"}).out);
  CHECK(l.num(0, "value") == doctest::Approx(50.16667).epsilon(1e-7));
  const auto a10 = parse_csv(call({"asympt", "--formula", "airy-tail", "--s", "10"}).out);
  CHECK(a10.num(0, "value") == doctest::Approx(-83.757696).epsilon(1e-8));
  const auto t = parse_csv(call({"asympt", "--formula", "theorem", "--n", "60", "--gamma", "0", "--alpha", "0.6"}).out);
  CHECK(t.rows[0][t.col("remainder")].find("O(") != std::string::npos);
}

TEST_CASE("compare: lemma difference shrinks like 1/n^2") {
  const auto r = call({"compare", "--formula", "lemma", "--n", "40,80", "--gamma", "1", "--alpha", "0.4"});
  REQUIRE(r.code == 0);
  const auto c = parse_csv(r.out);
  REQUIRE(c.rows.size() == 2);
  CHECK(c.rows[0][c.col("order")] == "nan");
  CHECK(c.num(1, "order") == doctest::Approx(2.0).epsilon(0.25));
}

TEST_CASE("painleve: residuals are small") {
  const auto r = call({"painleve", "--n", "6", "--gamma", "1", "--t", "5,10"});
  REQUIRE(r.code == 0);
  const auto c = parse_csv(r.out);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(c.num(i, "sigma_residual_rel") <= 1e-5);
    CHECK(c.num(i, "pv_residual_rel") <= 1e-4);
    CHECK(c.num(i, "bridge_rel") <= 1e-4);
  }
  const auto d = parse_csv(call({"painleve", "--n", "5", "--gamma", "0.5", "--t", "4,8", "--integrate-from", "20"}).out);
  for (std::size_t i = 0; i < 2; ++i) CHECK(d.num(i, "ode_rel") <= 1e-6);
}

TEST_CASE("output is reproducible under SOURCE_DATE_EPOCH") {
  setenv("SOURCE_DATE_EPOCH", "1700000000", 1);
  const auto a = call({"exact", "--n", "3", "--t", "2"});
  const auto b = call({"exact", "--n", "3", "--t", "2"});
  CHECK(a.out == b.out);
  CHECK(a.out.find("2023-11-14T22:13:20Z") != std::string::npos);
  unsetenv("SOURCE_DATE_EPOCH");
}

TEST_CASE("json output") {
  const auto r = call({"--format", "json", "exact", "--n", "2", "--t", "1,2"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["manifest"]["subcommand"] == "exact");
  CHECK(j["rows"].size() == 2);
  CHECK(j["columns"][2] == "log_p");
  CHECK(j["rows"][1]["t"].get<double>() == 2.0);
}

TEST_CASE("global options may follow the subcommand") {
  const auto a = call({"--format", "json", "exact", "--n", "2", "--t", "1"});
  const auto b = call({"exact", "--n", "2", "--t", "1", "--format", "json"});
  REQUIRE(b.code == 0);
  CHECK(nlohmann::json::parse(a.out)["rows"] == nlohmann::json::parse(b.out)["rows"]);
}

TEST_CASE("--out writes the file") {
  const std::string path = "lue_cli_test_out.csv";
  std::remove(path.c_str());
  const auto r = call({"--out", path, "asympt", "--formula", "airy-tail", "--s", "3,4"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(parse_csv(ss.str()).rows.size() == 2);
  std::remove(path.c_str());
}

TEST_CASE("mc: report and dump") {
  const std::string path = "lue_cli_test_dump.csv";
  const auto r = call({"mc", "--n", "4", "--gamma", "0.5", "--samples", "4000", "--seed", "5", "--grid-points", "200",
                       "--dump", path});
  REQUIRE(r.code == 0);
  const auto c = parse_csv(r.out);
  CHECK(c.num(0, "ks") <= c.num(0, "band_99"));
  CHECK(c.manifest.find("\"seed\":5") != std::string::npos);
  std::ifstream f(path);
  std::string line;
  std::getline(f, line);
  CHECK(line.rfind("# manifest:", 0) == 0);
  std::getline(f, line);
  CHECK(line.find("seed=5") != std::string::npos);
  std::getline(f, line);
  CHECK(line == "lambda_max");
  int rows = 0;
  while (std::getline(f, line)) ++rows;
  CHECK(rows == 4000);
  std::remove(path.c_str());
}

TEST_CASE("exit codes") {
  CHECK(call({"exact", "--n", "0", "--t", "1"}).code == 2);
  CHECK(call({"exact", "--n", "3", "--gamma", "-2", "--t", "1"}).code == 2);
  CHECK(call({"exact", "--n", "20", "--t", "1", "--method", "hankel"}).code == 2);
  CHECK(call({"asympt", "--formula", "lemma", "--n", "5", "--alpha", "1.5"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  // x^gamma concentrates at the endpoint and the discretized measure collapses
  CHECK(call({"exact", "--n", "10", "--gamma", "1e6", "--t", "1"}).code == 3);
  CHECK(call({"tw", "--s", "12", "--nodes", "40"}).code == 4);
  const auto e = call({"tw", "--s", "12", "--nodes", "40"});
  CHECK(e.err.find("not converged") != std::string::npos);
}

TEST_CASE("installed tool") {
  CHECK(run_tool("--version") == 0);
  CHECK(run_tool("exact --n 2 --t 1") == 0);
  CHECK(run_tool("exact --n -1 --t 1") == 2);
  CHECK(run_tool("tw --s 12 --nodes 40") == 4);
  CHECK(run_tool("mc --n 3 --samples 500 --grid-points 50 --threads 2") == 0);
}
