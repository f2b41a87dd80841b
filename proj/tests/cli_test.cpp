#include <doctest.h>

#include <random>

#include <json.hpp>

#include "branchcount/error.hpp"
#include "branchcount/job.hpp"
#include "support.hpp"

using namespace testing;
using nlohmann::json;

TEST_CASE("parsing the documented examples") {
  CHECK(parse_polynomial("x^3", kXY) == Polynomial::monomial(E({3, 0})));
  CHECK(parse_polynomial("x*(x - y)", kXY) ==
        Polynomial::monomial(E({2, 0})) - Polynomial::monomial(E({1, 1})));
  const Ring r{"x1", "x2"};
  CHECK(parse_polynomial("9/10*x2^4", r) == Polynomial::monomial(E({0, 4}), Rational(9, 10)));
  CHECK(parse_polynomial(" - 2/4 * x ", kXY) == Polynomial::monomial(E({1, 0}), Rational(-1, 2)));
  CHECK(parse_polynomial("(x + y)*(x - y) - (x^2 - y^2)", kXY).is_zero());
}

TEST_CASE("parse errors carry positions") {
  auto position = [](const char* s) {
    try {
      parse_polynomial(s, kXY);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1L;
  };
  CHECK(position("x^") == 2);
  CHECK(position("x + z") == 4);
  CHECK(position("1/0") == 2);
  CHECK(position("2x") == 1);
  CHECK(position("x*(y") == 4);
  CHECK(position("x y") == 2);
  CHECK(position("(x+y)^2") == 5);
  CHECK(caret_diagnostic("x^", 2, "expected a number") == "expected a number\n  x^\n    ^");
}

TEST_CASE("rings") {
  CHECK(parse_ring("x, y,z") == Ring{"x", "y", "z"});
  CHECK_THROWS_AS(parse_ring("x,x"), ParseError);
  CHECK_THROWS_AS(parse_ring("x,1y"), ParseError);
  CHECK_THROWS_AS(parse_ring(""), ParseError);
}

TEST_CASE("printing is ascending in the local order and reparses") {
  CHECK(format_polynomial(P("x*(x - y)"), kXY) == "x^2 - x*y");
  CHECK(format_polynomial(P("-x^3 + 1/2*y - 3"), kXY) == "-3 + 1/2*y - x^3");
  CHECK(format_polynomial(Polynomial(2), kXY) == "0");
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 150; ++trial) {
    Polynomial f = random_poly(rng, 3, 0, 6, 5, 9);
    f *= Rational(1 + trial % 4, 1 + trial % 7);
    const std::string s = format_polynomial(f, kXYZ);
    CHECK(parse_polynomial(s, kXYZ) == f);
  }
}

TEST_CASE("job files") {
  const Job job = load_job(R"j({"command": "branches", "ring": ["x", "y"], "generators": ["x^3", "x*(x - y)"],
                               "a": [[1, "-6"]], "b": [1, 5], "seed": 4, "k": 4})j");
  CHECK(job.command == "branches");
  CHECK(job.ring == kXY);
  CHECK(job.a->at(0) == std::vector<std::string>{"1", "-6"});
  CHECK(job.seed == 4);
  CHECK(job.k == 4u);
  CHECK(load_job(R"j({"ring": "x,y", "generators": ["x"]})j").ring == kXY);
  CHECK_THROWS_AS(load_job("{"), ParseError);
  CHECK_THROWS_AS(load_job(R"j({"ring": ["x"], "generators": ["x"], "colour": 1})j"), ParseError);
  CHECK_THROWS_AS(load_job(R"j({"generators": ["x"]})j"), ParseError);
}

TEST_CASE("branches job reproduces the first plane example") {
  Job job = load_job(R"j({"command": "branches", "ring": ["x", "y"], "generators": ["x^3", "x*(x - y)"],
                         "a": [[1, -6]], "b": [1, 5]})j");
  const auto out = run_job(job);
  CHECK(out.exit_code == exit_code::success);
  const json r = json::parse(out.report);
  CHECK(r["result"]["b0"] == 2);
  CHECK(r["result"]["xi"] == 3);
  CHECK(r["result"]["reduction"]["J2"] == json::parse("[[2,0],[1,5]]"));
  CHECK(r["generators"] == json::parse(R"(["x^3", "x^2 - x*y"])"));
  CHECK(run_job(job).report == out.report);
}

TEST_CASE("reports are byte-identical for equal seeds") {
  Job job;
  job.command = "branches";
  job.ring = kXY;
  job.generators = {"x^3", "x*(x - y)"};
  job.seed = 17;
  const auto a = run_job(job), b = run_job(job);
  CHECK(a.exit_code == exit_code::success);
  CHECK(a.report == b.report);
  CHECK(json::parse(a.report)["result"]["reduction"]["user_supplied"] == false);
}

TEST_CASE("map23 job for the second germ") {
  Job job = load_job(R"j({"command": "map23", "ring": ["x1", "x2"],
                         "generators": ["x1^2 - 2*x2^2", "x1*x2 + x1^3", "x1*x2 - x2^3"],
                         "a": [[1, -3, 0, 0, 0, 1], [0, 1, 0, 0, -2, 0], [0, 0, 1, 3, 0, 1]],
                         "b": [1, 0, 0, 0, 0, 0]})j");
  const auto out = run_job(job);
  REQUIRE(out.exit_code == exit_code::success);
  const json r = json::parse(out.report)["result"];
  CHECK(r["d2_count"] == 1);
  CHECK(r["d2_status"] == "exact");
  CHECK(r["branches"]["xi"] == 4);
  CHECK(r["branches"]["k"] == 6);
}

TEST_CASE("exit codes") {
  Job job;
  job.ring = kXY;
  job.command = "staircase";
  job.generators = {"x^"};
  auto out = run_job(job);
  CHECK(out.exit_code == exit_code::parse);
  CHECK(out.text.find("x^\n    ^") != std::string::npos);

  job.command = "branches";
  job.generators = {"x^2"};  // a double line: not an isolated singularity
  out = run_job(job);
  CHECK(out.exit_code == exit_code::certificate);
  CHECK(json::parse(out.report)["error"]["stage"] == "isolated_singularity");

  job.generators = {"x", "y^2"};  // rank n-1
  CHECK(run_job(job).exit_code == exit_code::certificate);

  job.command = "frobnicate";
  job.generators = {"x"};
  CHECK(run_job(job).exit_code == exit_code::parse);

  job.command = "degree";
  job.generators = {"x^2 - y^2", "2*x*y"};
  out = run_job(job);
  CHECK(out.exit_code == exit_code::success);
  CHECK(json::parse(out.report)["result"]["degree"] == 2);
}
