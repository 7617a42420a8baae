#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mpvi/error.hpp"
#include "mpvi/job.hpp"

using namespace mpvi;

namespace {

const Json pencil_job = Json::parse(R"({"ambient_dim": 2, "hyperplanes": [[1, 0], [0, 1], [1, 1]],
  "exponents": ["1/2", "1/4", "1/4"], "multiplicities": [1, 1, 1]})");

ErrorKind kind_of(const std::string& command, const Json& job) {
  try {
    run_job(command, job, {});
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::ParseError;
}

}  // namespace

TEST_CASE("documents echo the job and carry provenance") {
  JobOptions options;
  options.seed = 9;
  Json doc = run_job("pv", pencil_job, options);
  CHECK(doc["job"]["command"] == "pv");
  CHECK(doc["job"]["hyperplanes"] == pencil_job["hyperplanes"]);
  CHECK(doc["provenance"]["tool"] == "mpvi");
  CHECK(doc["provenance"]["version"] == tool_version);
  CHECK(doc["provenance"]["seed"] == 9);
  CHECK(doc["result"]["q"] == 4);
  CHECK(doc["result"]["closed_strata_agree"] == true);
  CHECK(puiseux_from_json(doc["result"]["pv"]) ==
        PuiseuxRational(4, LaurentPoly(-4, {1, 2, 3, 2, 1})));
}

TEST_CASE("values survive a JSON round trip") {
  PuiseuxRational x = PuiseuxRational::inverse_binomial(3, 2) * PuiseuxRational(3, LaurentPoly(-1, {2, 0, -5}));
  CHECK(puiseux_from_json(Json::parse(to_json(x).dump())) == x);
  CHECK(to_json(Rational(-3, 4)) == "-3/4");
  CHECK(to_json(LaurentPoly(-1, {2, 0, 1})) == Json::parse("[[-1, 2], [1, 1]]"));
}

TEST_CASE("every command answers for the pencil") {
  for (const char* command : {"edges", "classes", "pv", "delta", "generic-closed-form", "formal", "poles",
                              "ndpole", "witness-search", "positive-a", "check"}) {
    CAPTURE(command);
    Json doc = run_job(command, pencil_job, {});
    CHECK(doc.contains("result"));
  }
  Json delta = run_job("delta", pencil_job, {});
  CHECK(delta["result"]["agree"] == true);
  CHECK(delta["result"]["delta"] == 1);
  Json check = run_job("check", pencil_job, {});
  CHECK(check["result"]["all_passed"] == true);
  Json edges = run_job("edges", pencil_job, {});
  CHECK(edges["result"]["edges"].size() == 4);
  CHECK(edges["result"]["indecomposable"] == true);
}

TEST_CASE("repeated runs are identical") {
  JobOptions options;
  options.seed = 5;
  for (const char* command : {"check", "witness-search", "formal"}) {
    CHECK(run_job(command, pencil_job, options).dump() == run_job(command, pencil_job, options).dump());
  }
}

TEST_CASE("invalid jobs") {
  Json bad = pencil_job;
  bad["exponents"] = Json::array({"1/2", "1/2", "1/2"});
  CHECK(kind_of("pv", bad) == ErrorKind::DegreeCondition);
  bad["exponents"] = Json::array({"1/2", "1/2", "0"});
  CHECK(kind_of("pv", bad) == ErrorKind::LogarithmicPole);
  bad["exponents"] = Json::array({"x", "1/2", "0"});
  CHECK(kind_of("pv", bad) == ErrorKind::ParseError);
  CHECK(kind_of("pv", Json::parse(R"({"ambient_dim": 2, "hyperplanes": [[0, 0]]})")) == ErrorKind::ZeroNormal);
  CHECK(kind_of("edges", Json::parse(R"({"ambient_dim": 2, "hyperplanes": [[1, 1], [2, 2]]})")) ==
        ErrorKind::DuplicateHyperplane);
  CHECK(kind_of("edges", Json::parse(R"({"ambient_dim": 3, "hyperplanes": [[1, 1]]})")) ==
        ErrorKind::DimensionMismatch);
  CHECK(kind_of("nosuch", pencil_job) == ErrorKind::ParseError);
  CHECK(kind_of("ndpole", Json::parse(R"({"ambient_dim": 2, "hyperplanes": [[1, 0], [0, 1]],
    "multiplicities": [1, 1]})")) == ErrorKind::Decomposable);

  Json err = error_document("pv", pencil_job, {}, "LogarithmicPole", "b_W = 0", "[(0, 1)]");
  CHECK(err["error"]["kind"] == "LogarithmicPole");
  CHECK(err["error"]["subject"] == "[(0, 1)]");
  CHECK_FALSE(err.contains("result"));
}
