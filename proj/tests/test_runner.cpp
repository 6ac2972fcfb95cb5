#include "magic4/runner.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace magic4;

#ifndef MAGIC4_FIXTURES_DIR
#define MAGIC4_FIXTURES_DIR "fixtures"
#endif

TEST_CASE("missing fixtures are a configuration error") {
  RunConfig cfg;
  cfg.fixtures_dir = "no/such/dir";
  CHECK_THROWS_AS(Verifier(cfg), ConfigError);
}

TEST_CASE("unknown suites are rejected") {
  RunConfig cfg;
  cfg.fixtures_dir = MAGIC4_FIXTURES_DIR;
  cfg.suites = {"spectral"};
  Verifier v(cfg);
  CHECK_THROWS_AS(v.run(), ConfigError);
}

TEST_CASE("a single fast suite runs clean and in canonical order") {
  RunConfig cfg;
  cfg.fixtures_dir = MAGIC4_FIXTURES_DIR;
  cfg.suites = {"pauli"};
  Verifier v(cfg);
  RunReport rep = v.run();
  CHECK(rep.failed == 0);
  CHECK(rep.skipped == 0);
  CHECK(rep.passed == (int)rep.checks.size());
  for (size_t k = 1; k < rep.checks.size(); ++k) {
    CHECK(rep.checks[k - 1].suite <= rep.checks[k].suite);
    if (rep.checks[k - 1].suite == rep.checks[k].suite)
      CHECK(rep.checks[k - 1].name < rep.checks[k].name);
  }
  for (const auto& e : rep.checks) CHECK(e.suite == "pauli");
}

TEST_CASE("the report is deterministic modulo timing") {
  RunConfig cfg;
  cfg.fixtures_dir = MAGIC4_FIXTURES_DIR;
  cfg.suites = {"ktheory"};
  cfg.samples = 20000;
  Verifier v(cfg);
  RunReport a = v.run();
  RunReport b = v.run();
  REQUIRE(a.checks.size() == b.checks.size());
  for (size_t k = 0; k < a.checks.size(); ++k) {
    CHECK(a.checks[k].name == b.checks[k].name);
    CHECK(a.checks[k].status == b.checks[k].status);
    CHECK(a.checks[k].claim == b.checks[k].claim);
    CHECK(a.checks[k].witness == b.checks[k].witness);
  }
  CHECK(a.passed == b.passed);
}

TEST_CASE("serial and parallel runs agree") {
  RunConfig cfg;
  cfg.fixtures_dir = MAGIC4_FIXTURES_DIR;
  cfg.suites = {"theorem-b"};
  Verifier vp(cfg);
  RunConfig serial = cfg;
  serial.jobs = 1;
  Verifier vs(serial);
  RunReport a = vp.run(), b = vs.run();
  REQUIRE(a.checks.size() == b.checks.size());
  for (size_t k = 0; k < a.checks.size(); ++k) {
    CHECK(a.checks[k].name == b.checks[k].name);
    CHECK(a.checks[k].status == b.checks[k].status);
  }
}
