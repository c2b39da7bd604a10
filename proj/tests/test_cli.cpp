#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "evpos");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = evpos::cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const char* const kDegreeTen = "1 + z^3 + z^4 - 0.01z^5 + z^6 + z^7 + z^10";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("classify json") {
  const auto r = invoke({"classify", kDegreeTen, "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "classify");
  CHECK(j["status"] == "NotEventuallyNonNegative");
  CHECK(j["witness"]["kind"] == "CoveringFailure");
  CHECK(j["witness"]["index"] == 5);
  CHECK(j["k"] == 0);
  CHECK(j["l"] == 1);
  CHECK(j["strong_positivity"]["status"] == "Certified");
  CHECK(j["polynomial"] == "1 + z^3 + z^4 - 1/100z^5 + z^6 + z^7 + z^10");
}

TEST_CASE("classify text") {
  const auto r = invoke({"classify", kDegreeTen});
  CHECK(r.code == 0);
  CHECK(r.out.find("NotEventuallyNonNegative") != std::string::npos);
}

TEST_CASE("power csv") {
  const auto r = invoke({"power", "1+z", "--m", "4", "--format", "csv"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "m,n,numerator,denominator_exponent,sign");
  std::vector<std::string> numerators;
  while (std::getline(lines, line)) {
    std::vector<std::string> fields;
    std::stringstream row(line);
    std::string field;
    while (std::getline(row, field, ',')) fields.push_back(field);
    REQUIRE(fields.size() == 5);
    numerators.push_back(fields[2]);
  }
  CHECK(numerators == std::vector<std::string>{"1", "4", "6", "4", "1"});
}

TEST_CASE("sign profile") {
  const auto r = invoke({"power", kDegreeTen, "--sign-profile", "--m-min", "1", "--m-max", "40", "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("m,n,sign\n", 0) == 0);
  CHECK(r.out.find("\n1,5,-1\n") != std::string::npos);
  CHECK(r.out.find("\n40,5,-1\n") != std::string::npos);
  const auto t = invoke({"power", "1+z^2+z^3-1/10z^4+z^5+z^6", "--sign-profile", "--m-min", "2", "--m-max", "30",
                         "--format", "csv"});
  CHECK(t.code == 0);
  CHECK(t.out.find(",-1\n") == std::string::npos);
}

TEST_CASE("saddle json") {
  const auto r = invoke({"saddle", "1+z", "--n", "10", "--m", "200", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["rel_error"].get<double>() < 0.05);
  CHECK(j["exact"] == "22451004309013280");
  CHECK(j.contains("split"));
  CHECK(invoke({"saddle", "1+z", "--n", "10"}).code == 1);

  // Beyond double range the value is written as a decimal string.
  const auto big = nlohmann::json::parse(
      invoke({"saddle", "1+2z+3z^2", "--n", "500", "--m", "12000", "--format", "json"}).out);
  REQUIRE(big["estimate"].is_string());
  CHECK(big["estimate"].get<std::string>().find("e+1058") != std::string::npos);
  CHECK(big["split"]["I1"].is_string());
  CHECK(big["log_scale"].get<double>() > 2000);
}

TEST_CASE("other commands") {
  auto r = invoke({"covering", "1+z^2-z^3+z^4", "--format", "json"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["covering"]["two_sided"] == false);

  r = invoke({"strongpos", "1-z+z^2", "--format", "json"});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["strong_positivity"]["status"] == "Refuted");

  r = invoke({"threshold", "1+z^2+z^3-1/10z^4+z^5+z^6", "--m-max", "50", "--format", "json"});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["m0"] == 2);

  r = invoke({"partitions", "1+z^2+z^3-z^5", "--n", "5", "--m", "10", "--format", "json"});
  CHECK(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["coefficient"] == "80");
}

TEST_CASE("exit codes") {
  auto r = invoke({"classify", "1 + + z"});
  CHECK(r.code == 1);
  CHECK(r.err.find("position 4") != std::string::npos);
  CHECK(invoke({"frobnicate", "1+z"}).code == 1);
  CHECK(invoke({"classify"}).code == 1);
  CHECK(invoke({"partitions", "1+z", "--n", "20", "--m", "5"}).code == 2);
  // A depth budget of one level cannot settle this certification.
  r = invoke({"strongpos", kDegreeTen, "--depth", "1", "--format", "json"});
  CHECK(r.code == 2);
  CHECK(nlohmann::json::parse(r.out)["strong_positivity"]["status"] == "Inconclusive");
  CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("reproducible json") {
  for (const char* poly : {"1-z+z^2", "1+z-3/2z^3+z^4", kDegreeTen}) {
    const auto a = invoke({"classify", poly, "--format", "json", "--seed", "7"});
    const auto b = invoke({"classify", poly, "--format", "json", "--seed", "7"});
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}

TEST_CASE("out path") {
  const auto path = std::filesystem::temp_directory_path() / "evpos_cli_test.json";
  const auto r = invoke({"classify", "1+z", "--format", "json", "--out", path.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["status"] == "EventuallyNonNegative");
  std::filesystem::remove(path);
}

}  // TEST_SUITE
