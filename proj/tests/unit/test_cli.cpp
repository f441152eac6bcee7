#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>
#include <omp.h>

#include "sigconv/cli.hpp"

using namespace sigconv;
using namespace sigconv::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("csv and json table output") {
  Table t;
  t.columns = {"n", "value", "ratio"};
  t.rows.push_back({std::int64_t{1}, Integer("123456789012345678901234567890"), Rational(-3, 4)});
  std::ostringstream csv;
  write_table(t, OutputFormat::csv, csv);
  CHECK(csv.str() == "n,value,ratio\n1,123456789012345678901234567890,-3/4\n");
  std::ostringstream js;
  write_table(t, OutputFormat::json, js);
  const auto doc = nlohmann::ordered_json::parse(js.str());
  CHECK(doc[0]["n"] == 1);
  CHECK(doc[0]["value"] == "123456789012345678901234567890");
  CHECK(doc[0]["ratio"] == "-3/4");
  CHECK(doc[0].begin().key() == "n");
}

TEST_CASE("wab") {
  const auto r = invoke({"wab", "--a", "1", "--b", "7", "--n-max", "9"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("n,w_formula,w_brute,match\n", 0) == 0);
  CHECK(r.out.find("8,1,1,1\n") != std::string::npos);
  CHECK(r.out.find("9,3,3,1\n") != std::string::npos);
  CHECK(r.out.find('\r') == std::string::npos);

  const auto swapped = invoke({"wab", "--a", "56", "--b", "2", "--n-max", "60", "--mode", "formula"});
  CHECK(swapped.code == kExitOk);
  CHECK(swapped.out.find("58,1\n") != std::string::npos);

  const auto brute = invoke({"wab", "--a", "3", "--b", "5", "--n-max", "8", "--mode", "brute"});
  CHECK(brute.code == kExitOk);
  CHECK(brute.out.find("8,1\n") != std::string::npos);

  CHECK(invoke({"wab", "--a", "3", "--b", "5", "--n-max", "8"}).code == kExitDomainError);
  CHECK(invoke({"wab", "--a", "0", "--b", "7"}).code == kExitUsage);
  CHECK(invoke({"wab", "--a", "1", "--b", "7", "--mode", "guess"}).code == kExitUsage);
  CHECK(invoke({"wab", "--b", "7"}).code == kExitUsage);
}

TEST_CASE("wab json") {
  const auto r = invoke({"wab", "--a", "4", "--b", "7", "--n-max", "11", "--format", "json"});
  CHECK(r.code == kExitOk);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc.size() == 11);
  CHECK(doc[10]["n"] == 11);
  CHECK(doc[10]["w_formula"] == 1);
  CHECK(doc[10]["match"] == 1);
}

TEST_CASE("r7") {
  const auto r = invoke({"r7", "--n-max", "28", "--mode", "all"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("n,r7_closed,r7_via_w,r7_enumerate,match\n", 0) == 0);
  CHECK(r.out.find("28,8920,8920,8920,1\n") != std::string::npos);
  const auto e = invoke({"r7", "--n-max", "7", "--mode", "enumerate"});
  CHECK(e.out == "n,r7_enumerate\n1,8\n2,24\n3,32\n4,24\n5,48\n6,96\n7,72\n");
}

TEST_CASE("eta") {
  const auto r = invoke({"eta", "--level", "28", "--spec", "1:5,2:-1,7:5,14:-1", "--terms", "4"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("is_cusp: true\n") != std::string::npos);
  CHECK(r.out.find("coefficients:\n0 0\n1 1\n2 -5\n3 6\n") != std::string::npos);
  CHECK(invoke({"eta", "--level", "28", "--spec", "1:5;2"}).code == kExitUsage);
  CHECK(invoke({"eta", "--level", "28", "--spec", "3:4"}).code == kExitUsage);
  const auto frac = invoke({"eta", "--level", "2", "--spec", "1:1"});
  CHECK(frac.code == kExitDomainError);
  CHECK(frac.out.empty());
}

TEST_CASE("delta") {
  const auto r = invoke({"delta", "--form", "4,14,1", "--terms", "3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "n,coefficient\n1,1\n2,2\n3,-2\n");
  const auto u = invoke({"delta", "--form", "4,7", "--terms", "2", "--format", "json"});
  const auto doc = nlohmann::ordered_json::parse(u.out);
  CHECK(doc[1]["coefficient"] == -1);
  CHECK(invoke({"delta", "--form", "5,7"}).code == kExitUsage);
}

TEST_CASE("verify at the Sturm-minimal order") {
  const auto r = invoke({"verify", "--order", "16", "--report", "json"});
  CHECK(r.code == kExitOk);
  const auto doc = nlohmann::ordered_json::parse(r.out);
  CHECK(doc["failed"] == 0);
  for (const auto& item : doc["identities"]) {
    CHECK(item["passed"] == true);
    if (item["name"] == "cusp-shift") CHECK(item["verified_order"] == 32);
  }
}

TEST_CASE("verify fails with exit 3 on a corrupted identity") {
  auto suite = default_identity_suite();
  auto& target = suite.front();
  const auto original = target.sides;
  target.sides = [original](std::size_t order) {
    auto sides = original(order);
    sides.second = sides.second + QSeries::monomial(sides.second.order(), 5);
    return sides;
  };
  std::ostringstream out;
  std::ostringstream err;
  CHECK(run_verify(suite, 20, "text", out, err) == kExitIdentityFailure);
  CHECK(err.str().find(target.name) != std::string::npos);
  CHECK(out.str().find("FAIL " + target.name) != std::string::npos);
}

TEST_CASE("corruption beyond the Sturm bound is still caught by corroboration") {
  auto suite = default_identity_suite();
  auto& target = suite.front();
  const auto original = target.sides;
  target.sides = [original](std::size_t order) {
    auto sides = original(order);
    sides.second = sides.second + QSeries::monomial(sides.second.order(), 30);
    return sides;
  };
  const auto outcome = run_identity(target, 40);
  CHECK(outcome.sturm_verdict);
  CHECK_FALSE(outcome.corroborated);
  CHECK_FALSE(outcome.passed());
}

TEST_CASE("SIGMA_CONVOLVE_ORDER sets the default order") {
  ::setenv("SIGMA_CONVOLVE_ORDER", "12", 1);
  CHECK(default_order() == 12);
  const auto r = invoke({"delta", "--form", "4,7"});
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 13);
  ::setenv("SIGMA_CONVOLVE_ORDER", "junk", 1);
  CHECK(default_order() == 100);
  ::unsetenv("SIGMA_CONVOLVE_ORDER");
  CHECK(default_order() == 100);
}

TEST_CASE("output is byte-identical across thread counts") {
  const std::vector<std::vector<std::string>> commands = {
      {"wab", "--a", "1", "--b", "14", "--n-max", "300", "--format", "json"},
      {"r7", "--n-max", "120", "--mode", "all"},
      {"delta", "--form", "4,7", "--terms", "80"},
      {"verify", "--order", "60", "--report", "json"},
  };
  const int previous = omp_get_max_threads();
  for (const auto& args : commands) {
    omp_set_num_threads(1);
    const auto single = invoke(args);
    omp_set_num_threads(4);
    const auto many = invoke(args);
    CHECK(single.code == kExitOk);
    CHECK(single.out == many.out);
  }
  omp_set_num_threads(previous);
}
