#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bowling/cli.hpp"
#include "bowling/json_io.hpp"
#include "bowling/state_space.hpp"

using namespace bowling;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "bowling");
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json entry(const Json& m, std::size_t row, std::size_t col) {
  for (const auto& e : m["entries"])
    if (e[0] == row && e[1] == col) return e[2];
  return Json();
}

bool is_identity(const Json& m, std::size_t dim) {
  if (m["dim"] != dim || m["entries"].size() != dim) return false;
  for (const auto& e : m["entries"])
    if (e[0] != e[1] || e[2] != to_json(QPoly{1})) return false;
  return true;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("bowling_cli_" + name);
}

}  // namespace

TEST_CASE("rho") {
  StateSpace space(3, 1);
  auto u = space.index(Counts{1, 0, 0});
  auto v = space.index(Counts{0, 0, 1});

  Result r = run({"rho", "1 2 1", "--n", "3", "--max-balls", "1"});
  REQUIRE(r.code == cli::exit_ok);
  Json m = Json::parse(r.out);
  CHECK(m["dim"] == 8);
  CHECK(m["N"] == 1);
  CHECK(poly_from_json(entry(m, v, u)) == QPoly::monomial(2));

  r = run({"rho", "1 2 1", "--n", "3", "--max-balls", "1", "--eval-q", "1/2"});
  REQUIRE(r.code == cli::exit_ok);
  CHECK(scalar_from_json(entry(Json::parse(r.out), v, u)) == QScalar(1) / 4);

  r = run({"rho", "", "--n", "2", "--max-balls", "2"});
  REQUIRE(r.code == cli::exit_ok);
  CHECK(is_identity(Json::parse(r.out), 9));
}

TEST_CASE("rho pretty output") {
  Result r = run({"rho", "1", "--n", "2", "--max-balls", "1", "--format", "pretty"});
  REQUIRE(r.code == cli::exit_ok);
  CHECK(r.out.find("[0,1] <- [1,0]: q\n") != std::string::npos);
  CHECK(r.out.find("[1,0] <- [1,0]: 1 - q\n") != std::string::npos);
}

TEST_CASE("cabled") {
  Result r = run({"cabled", "1", "--n", "2", "--cable", "2"});
  REQUIRE(r.code == cli::exit_ok);
  Json m = Json::parse(r.out);
  StateSpace space(2, 2);
  auto col = space.index(Counts{2, 0});
  CHECK(m["dim"] == 9);
  CHECK(m["K"] == 2);
  CHECK(poly_from_json(entry(m, space.index(Counts{0, 2}), col)) == QPoly::monomial(4));
  CHECK(poly_from_json(entry(m, space.index(Counts{1, 1}), col)) == QPoly{0, 1, 1, -1, -1});
  CHECK(poly_from_json(entry(m, space.index(Counts{2, 0}), col)) == QPoly{1, -1, -1, 1});

  r = run({"cabled", "", "--n", "2", "--cable", "1"});
  REQUIRE(r.code == cli::exit_ok);
  CHECK(is_identity(Json::parse(r.out), 4));

  r = run({"cabled", "1 2 1", "--n", "3", "--cable", "2", "--eval-q", "1"});
  REQUIRE(r.code == cli::exit_ok);
  m = Json::parse(r.out);
  StateSpace s3(3, 2);
  CHECK(m["entries"].size() == 27);
  for (const auto& e : m["entries"]) {
    Counts from = s3.state(e[1].get<std::size_t>());
    CHECK(s3.state(e[0].get<std::size_t>()) == Counts{from[2], from[1], from[0]});
    CHECK(scalar_from_json(e[2]) == 1);
  }
}

TEST_CASE("fall") {
  Result r = run({"fall", "--cable", "1", "--a", "1", "--b", "0"});
  REQUIRE(r.code == cli::exit_ok);
  CHECK(r.out == R"({"K":1,"a":1,"b":0,"dist":{"0":{"coeffs":[0,1]},"1":{"coeffs":[1,-1]}}})" "\n");

  r = run({"fall", "--cable", "2", "--a", "1", "--b", "2"});
  REQUIRE(r.code == cli::exit_ok);
  CHECK(Json::parse(r.out)["dist"].dump() == R"({"0":{"coeffs":[1]}})");

  r = run({"fall", "--cable", "2", "--a", "2", "--b", "0", "--format", "pretty"});
  REQUIRE(r.code == cli::exit_ok);
  CHECK(r.out == "0: q^4\n1: q + q^2 - q^3 - q^4\n2: 1 - q - q^2 + q^3\n");
}

TEST_CASE("check suites") {
  Result r = run({"check", "all", "--n", "3", "--max-balls", "2", "--cable", "2"});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out.find("FAIL") == std::string::npos);

  r = run({"check", "specht", "--n", "4", "--max-balls", "2", "--k", "1"});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out.find("PASS") != std::string::npos);

  r = run({"check", "braid", "--n", "4", "--max-balls", "1", "--format", "json"});
  CHECK(r.code == cli::exit_ok);
  Json j = Json::parse(r.out);
  CHECK(j["suite"] == "braid");
  CHECK(j["passed"] == true);
  CHECK(j["checks"].size() == 2);
}

TEST_CASE("corrupted generator fails the hecke suite") {
  Result r = run({"check", "hecke", "--n", "2", "--max-balls", "1", "--inject-fault", "--format", "json"});
  CHECK(r.code == cli::exit_check_failed);
  Json j = Json::parse(r.out);
  CHECK(j["passed"] == false);
  const Json& first = j["checks"][0];
  CHECK(first["passed"] == false);
  CHECK(first["failure"]["input"].dump() == "[0,0]");
  CHECK(first["failure"]["output"].dump() == "[0,0]");
  CHECK(first["failure"]["expected"] == "0");

  r = run({"check", "hecke", "--n", "2", "--max-balls", "1", "--inject-fault"});
  CHECK(r.code == cli::exit_check_failed);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("usage errors exit 2 with no output") {
  const std::vector<std::vector<std::string>> bad{
      {},
      {"rho", "3", "--n", "3", "--max-balls", "1"},
      {"rho", "1 x", "--n", "3", "--max-balls", "1"},
      {"rho", "1", "--n", "3"},
      {"rho", "1", "--n", "3", "--max-balls", "0"},
      {"rho", "1", "--n", "3", "--max-balls", "1", "--eval-q", "1/0"},
      {"rho", "1", "--n", "3", "--max-balls", "1", "--format", "xml"},
      {"rho", "1", "--n", "20", "--max-balls", "3"},
      {"cabled", "1", "--n", "2", "--cable", "0"},
      {"fall", "--cable", "2", "--a", "3", "--b", "0"},
      {"fall", "--cable", "0", "--a", "0", "--b", "0"},
      {"check", "nonsense"},
      {"check", "specht", "--n", "3", "--max-balls", "2"},
      {"check", "specht", "--n", "4", "--max-balls", "1", "--k", "3"},
      {"check", "braid", "--n", "2"},
      {"check", "hecke", "--q", "0"},
      {"check", "hecke", "--q", "abc"},
      {"check", "cabled", "--cable", "9"},
      {"frobnicate"},
  };
  for (const auto& args : bad) {
    CAPTURE(args.size());
    Result r = run(args);
    CHECK(r.code == cli::exit_usage);
    CHECK(r.out.empty());
    CHECK(!r.err.empty());
  }
}

TEST_CASE("help exits 0") {
  Result r = run({"--help"});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out.find("rho") != std::string::npos);
}

TEST_CASE("--out writes the file and leaves stdout empty") {
  auto path = temp_file("rho.json");
  std::filesystem::remove(path);
  Result r = run({"rho", "1", "--n", "2", "--max-balls", "1", "--out", path.string()});
  REQUIRE(r.code == cli::exit_ok);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str() == run({"rho", "1", "--n", "2", "--max-balls", "1"}).out);
  std::filesystem::remove(path);

  path = temp_file("missing.json");
  std::filesystem::remove(path);
  r = run({"rho", "9", "--n", "2", "--max-balls", "1", "--out", path.string()});
  CHECK(r.code == cli::exit_usage);
  CHECK(!std::filesystem::exists(path));
}

TEST_CASE("output is deterministic") {
  std::vector<std::string> args{"check", "stochastic", "--n", "3", "--max-balls", "2", "--words", "20", "--format", "json"};
  CHECK(run(args).out == run(args).out);
  std::vector<std::string> rho{"rho", "2 1 2 1", "--n", "3", "--max-balls", "2"};
  CHECK(run(rho).out == run(rho).out);
}
