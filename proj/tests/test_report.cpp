#include <doctest.h>

#include "sixmoment/error.hpp"
#include "sixmoment/report.hpp"

using namespace sixmoment;
using namespace sixmoment::report;

TEST_CASE("envelope status and ordering") {
  ReportEnvelope env;
  scan::ScanReport ok;
  ok.name = "b";
  ok.record("x", 1.0, 2.0, true);
  env.add(entry(ok));
  CHECK(env.status() == Status::Pass);
  scan::ScanReport bad;
  bad.name = "a";
  bad.record("y", 3.0, 2.0, false);
  env.add(entry(bad));
  CHECK(env.status() == Status::Fail);
  const auto j = env.to_json();
  CHECK(j["entries"][0]["key"] == "a");
  CHECK(j["status"] == "FAIL");
  CHECK(!j.contains("started"));
}

TEST_CASE("partial status") {
  ReportEnvelope env;
  env.partial = true;
  CHECK(env.status() == Status::Partial);
}

TEST_CASE("csv has a fixed header and quotes keys") {
  ReportEnvelope env;
  env.add(entry(estermann::LaurentTriple{4, 0.5, 0.1, -0.2}));
  const auto csv = env.to_csv();
  CHECK(csv.rfind("kind,key,field,value\n", 0) == 0);
  CHECK(csv.find("laurent,\"laurent,eta=4\",d3,0.5") != std::string::npos);
}

TEST_CASE("suite registry") {
  CHECK(is_suite("all"));
  CHECK(is_suite("hankel"));
  CHECK(!is_suite("nosuch"));
  CHECK_THROWS_AS(run_suite("nosuch", {}), Error);
  CHECK(run_suite("y-exponent", {}).front().pass());
}

TEST_CASE("serialization is deterministic") {
  SuiteOptions opt;
  opt.c_max = 30;
  opt.n_max = 10;
  ReportEnvelope a, b;
  for (auto& r : run_suite("sumstar", opt)) a.add(entry(r));
  for (auto& r : run_suite("sumstar", opt)) b.add(entry(r));
  CHECK(a.to_json().dump() == b.to_json().dump());
}
