#include <doctest.h>

#include <nlohmann/json.hpp>

#include <dunkl/errors.hpp>
#include <dunkl/root_system.hpp>
#include <dunkl/verify.hpp>

using namespace dunkl;

TEST_CASE("registry lists every check once") {
  const auto names = check_registry();
  CHECK(names.size() == 22);
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j) CHECK(names[i] != names[j]);
}

TEST_CASE("unknown check names are rejected") {
  const RootSystem rs = parse_root_system_spec("a1:k=1");
  CHECK_THROWS_AS(run_check("NOT_A_CHECK", rs, SuiteConfig{}), Error);
}

TEST_CASE("identity checks pass on the rank-1 system") {
  const RootSystem rs = parse_root_system_spec("a1:k=1");
  SuiteConfig cfg;
  for (const char* name : {"CDC_IDENTITY", "MOD_INEQ", "GAMMA_LOWER", "ISO_RATIO"}) {
    const CheckResult r = run_check(name, rs, cfg);
    CHECK(r.status == CheckStatus::Pass);
    CHECK(!r.rows.empty());
  }
}

TEST_CASE("semigroup norm checks are skipped off product systems") {
  const RootSystem rs = parse_root_system_spec("a2:k=1");
  const CheckResult r = run_check("PSEUDO_POINCARE", rs, SuiteConfig{});
  CHECK(r.status == CheckStatus::SkippedUnsupported);
}

TEST_CASE("report JSON carries the expected schema") {
  const RootSystem rs = parse_root_system_spec("a1:k=1");
  SuiteConfig cfg;
  const Report rep = run_suite(rs, cfg, {"ISO_RATIO", "GAMMA_LOWER"});
  const nlohmann::json j = report_to_json(rep);
  CHECK(j.contains("root_system"));
  CHECK(j.contains("constants"));
  CHECK(j.contains("checks"));
  CHECK(j.contains("seed"));
  CHECK(!j.contains("wall_time_seconds"));  // timing off by default
  REQUIRE(j["checks"].size() == 2);
  // Results come back in request order.
  CHECK(j["checks"][0]["name"] == "ISO_RATIO");
  CHECK(j["checks"][1]["name"] == "GAMMA_LOWER");
  for (const auto& c : j["checks"]) {
    CHECK(c.contains("statement"));
    CHECK(c.contains("status"));
    CHECK(c.contains("lhs"));
    CHECK(c.contains("rhs"));
    CHECK(c.contains("ratio"));
    CHECK(c.contains("rows"));
  }
  const nlohmann::json cj = constants_to_json(rep.constants);
  CHECK(cj.contains("macdonald_mehta"));
  CHECK(cj.contains("effective_dimension"));
}

TEST_CASE("csv tables have the fixed header") {
  const RootSystem rs = parse_root_system_spec("a1:k=1");
  const CheckResult r = run_check("ISO_RATIO", rs, SuiteConfig{});
  const std::string csv = check_result_csv(r);
  CHECK(csv.rfind("field,lhs,rhs,ratio,status\n", 0) == 0);
  CHECK(csv.find("chamber0") != std::string::npos);
}

TEST_CASE("thread count does not change the report") {
  const RootSystem rs = parse_root_system_spec("a1:k=1");
  const std::vector<std::string> subset = {"CDC_IDENTITY", "GAMMA_LOWER", "ISO_RATIO",
                                           "ISOPERIMETRIC", "MOD_INEQ"};
  SuiteConfig cfg1;
  cfg1.threads = 1;
  SuiteConfig cfg4 = cfg1;
  cfg4.threads = 4;
  const std::string a = report_to_json(run_suite(rs, cfg1, subset)).dump();
  const std::string b = report_to_json(run_suite(rs, cfg4, subset)).dump();
  CHECK(a == b);
}

TEST_CASE("status names are stable") {
  CHECK(std::string(check_status_name(CheckStatus::Pass)) == "PASS");
  CHECK(std::string(check_status_name(CheckStatus::Fail)) == "FAIL");
  CHECK(std::string(check_status_name(CheckStatus::SkippedUnsupported)) ==
        "SKIPPED_UNSUPPORTED");
}
