#include <doctest.h>

#include "yangian/verify.hpp"

using namespace yang;

TEST_CASE("every suite passes at the small default configuration") {
  VerifyConfig cfg;
  cfg.n = 2;
  cfg.p = 2;
  cfg.trunc = 5;
  cfg.smax = 3;
  for (const char* name :
       {"drinfeld", "gauss-identities", "center", "graded", "serieslab", "shifted"}) {
    CAPTURE(name);
    auto checks = run_suite(name, cfg);
    CHECK(!checks.empty());
    for (const auto& c : checks) {
      CAPTURE(c.name);
      CAPTURE(c.params.dump());
      CAPTURE(c.witness);
      CHECK(c.ok);
    }
  }
}

TEST_CASE("the combined suite is the union of the individual ones") {
  VerifyConfig cfg;
  cfg.trunc = 4;
  cfg.smax = 2;
  std::size_t total = 0;
  for (const char* name :
       {"drinfeld", "gauss-identities", "center", "graded", "serieslab", "shifted"})
    total += run_suite(name, cfg).size();
  CHECK(run_suite("all", cfg).size() == total);
}

TEST_CASE("unknown suite names are rejected") {
  CHECK_THROWS_AS(run_suite("nonsense", VerifyConfig{}), std::invalid_argument);
}

TEST_CASE("relation checks demand enough precision") {
  Ctx cx = make_context(2, 2);
  CHECK_THROWS_AS(verify_drinfeld_relations(cx, 4, 5), precision_error);
  CHECK(all_passed(verify_drinfeld_relations(cx, 2, 3)));
}

TEST_CASE("the report is deterministic and summarizes failures") {
  VerifyConfig cfg;
  cfg.trunc = 3;
  cfg.smax = 2;
  auto a = report_json(cfg, run_suite("gauss-identities", cfg));
  auto b = report_json(cfg, run_suite("gauss-identities", cfg));
  CHECK(a.dump() == b.dump());
  CHECK(a["config"]["n"] == 2);
  for (const auto& c : a["checks"]) CHECK(c["status"] == "pass");

  std::vector<Check> fake = {{"demo", {{"r", 1}}, false, "broken"}};
  auto r = report_json(cfg, fake);
  CHECK(r["checks"][0]["status"] == "fail");
  CHECK(r["checks"][0]["witness"] == "broken");
  CHECK(!all_passed(fake));
}
