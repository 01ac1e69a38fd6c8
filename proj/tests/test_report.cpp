#include <doctest.h>

#include <json.hpp>

#include "ratsurf/report.hpp"

using namespace ratsurf;

TEST_CASE("verdict semantics") {
  VerdictReport r;
  r.suite = "demo";
  r.exact("a", true);
  r.note("b", "informational", 1e9);
  CHECK(r.pass());
  r.bounded("c", 2e-6, 1e-6);
  CHECK_FALSE(r.pass());
  VerdictReport nan;
  nan.bounded("d", std::nan(""), 1.0);
  CHECK_FALSE(nan.pass());

  const auto j = nlohmann::json::parse(reports_to_json({r}));
  CHECK(j["status"] == "fail");
  REQUIRE(j["suites"].size() == 1);
  CHECK(j["suites"][0]["suite"] == "demo");
  CHECK(j["suites"][0]["checks"][1]["status"] == "report");
}

TEST_CASE("all suites pass on the desk-scale instances") {
  for (const auto& p : {figure1_params(), default_params(2, 6), default_params(3, 2), default_params(3, 4),
                        default_params(4, 2)}) {
    CAPTURE(p.n);
    CAPTURE(p.k);
    for (const auto& r : verify_all(p)) {
      CAPTURE(r.to_json());
      CHECK(r.pass());
    }
    CHECK(spectrum_suite(p.n, p.k).pass());
    CHECK(degree_suite(p.n, p.k).pass());
    CHECK(fixed_point_suite(p).pass());
  }
}

TEST_CASE("tampered center fails the chart suite") {
  SuiteOptions opt;
  opt.tamper_center = std::make_pair(0, 3);
  const VerdictReport r = chart_suite(figure1_params(), opt);
  CHECK_FALSE(r.pass());
  // The other suites do not look at the center table.
  CHECK(lattice_suite(2, 4, opt).pass());
}

TEST_CASE("Weyl report is explicit when the literal reading fails") {
  const VerdictReport r = factorization_suite(2, 4);
  const auto it = std::find_if(r.checks.begin(), r.checks.end(), [](const CheckResult& c) { return c.id == "weyl_literal"; });
  REQUIRE(it != r.checks.end());
  CHECK(it->status == CheckStatus::report);
  CHECK(it->detail.find("repair") != std::string::npos);
}

TEST_CASE("sample points avoid 0 and 1") {
  for (const auto& z : sample_points(20)) {
    CHECK(std::abs(z) > 0.05);
    CHECK(std::abs(z - 1.0) > 0.05);
  }
}
