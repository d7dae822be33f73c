#include <doctest.h>

#include <sstream>
#include <vector>

#include <json.hpp>

#include "qbarnes/cli.hpp"

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<const char*> args) {
  args.insert(args.begin(), "qbarnes");
  std::ostringstream out, err;
  const int code = qbarnes::cli_dispatch(static_cast<int>(args.size()), args.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval with the rational backend") {
  const Run r = run({"eval", "--n", "1", "--q", "1/2", "--x", "1", "--backend", "rational"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["family"] == "q-euler");
  CHECK(doc["value"]["num"] == "2");
  CHECK(doc["value"]["den"] == "3");
  CHECK(doc["method"] == "CLOSED");
}

TEST_CASE("eval series reports the summation method") {
  const Run r = run({"eval", "--n", "0", "--q", "0.5", "--a", "1", "--family", "barnes-q-euler", "--method", "series"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["method"] == "DIRECT");
  CHECK(std::abs(doc["value"]["re"].get<double>() - 4.0 / 3.0) < 1e-12);
  CHECK(doc["certifiedError"].get<double>() < 1e-10);
}

TEST_CASE("padic backend returns base-p digits") {
  const Run r = run({"eval", "--n", "1", "--q", "4", "--backend", "padic", "--p", "3", "--K", "4"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  // -1/5 = 16 = 1 + 2*3 + 1*9 mod 81
  CHECK(doc["value"]["residue"] == nlohmann::json::array({1, 2, 1, 0}));
}

TEST_CASE("identical invocations give identical output") {
  const std::vector<const char*> args{"zeta", "--s", "2.5", "--q", "0.5", "--w", "1,2", "--a", "1,1"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("exit codes") {
  CHECK(run({"eval", "--n", "1", "--chi", "4:1"}).code == 2);
  CHECK(run({"eval", "--n", "1", "--x", "oops"}).code == 2);
  CHECK(run({"eval", "--bogus"}).code == 2);
  const Run divergent = run({"eval", "--family", "q-euler-hr", "--h", "0", "--r", "2", "--n", "1", "--method", "series"});
  CHECK(divergent.code == 1);
  CHECK(nlohmann::json::parse(divergent.out)["error"] == "NoConvergence");
}

TEST_CASE("table emits one CSV row per degree") {
  const Run r = run({"table", "--n-from", "0", "--n-to", "3", "--backend", "rational", "--x", "1"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("n,num,den,", 0) == 0);
  CHECK(r.out.find("\n3,-8,45,CLOSED") != std::string::npos);
}

TEST_CASE("negative integer s goes through Bernoulli numbers") {
  const Run r = run({"eval", "--family", "barnes-classical", "--s", "-1", "--w", "2", "--a", "1,1", "--backend", "rational"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["method"] == "BERNOULLI");
  CHECK(doc["value"]["num"] == "1");
  CHECK(doc["value"]["den"] == "12");
}
