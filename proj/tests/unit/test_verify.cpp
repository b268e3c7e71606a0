#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "dunkl/error.hpp"
#include "dunkl/verify.hpp"

using namespace dunkl;
using nlohmann::json;

namespace {

SuiteConfig small() {
  SuiteConfig c;
  c.kappas = {-0.5, 0.5};
  c.half_width = 8.0;
  c.nodes = 256;
  c.family = {FamilyMember::parse("gaussian(0.5)"), FamilyMember::parse("bump(1,2)"), FamilyMember::parse("indicator_ball(1)")};
  return c;
}

}  // namespace

TEST_CASE("exponent triples") {
  const auto t = ExponentTriple::parse("2,inf,4");
  CHECK(t.q.value() == 2.0);
  CHECK(t.p.is_infinite());
  CHECK(t.str() == "2,inf,4");
  CHECK_THROWS_AS(ExponentTriple::parse("4,8,2"), DomainError);
  CHECK_THROWS_AS(ExponentTriple::parse("1,2"), DomainError);
}

TEST_CASE("config validation") {
  SuiteConfig c = small();
  CHECK_NOTHROW(c.validate());
  c.nodes = 130;
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = small();
  c.kappas = {-1.0};
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = small();
  c.r_max = 6.0;  // > L/2
  CHECK_THROWS_AS(c.validate(), DomainError);
  c = small();
  c.tolerances.inequality = -1.0;
  CHECK_THROWS_AS(c.validate(), DomainError);
  CHECK(small().radii().front() == doctest::Approx(8.0 * 16.0 / 128.0));
}

TEST_CASE("suite names and unknown suites") {
  const auto& n = suite_names();
  CHECK(n.front() == "kernel");
  CHECK(n.back() == "all");
  CHECK(n.size() == 15);
  try {
    run_suite("nosuch", small());
    FAIL("expected DomainError");
  } catch (const DomainError& e) {
    CHECK(std::string(e.what()).find("measure_lemmas") != std::string::npos);
  }
}

TEST_CASE("measure lemmas: zero failures, ball/interval ratio 1 attained") {
  const auto r = run_suite("measure_lemmas", small());
  CHECK(r.failures() == 0);
  double best = 0.0;
  for (const auto& c : r.cases)
    if (c.statement == "ball_interval_comparison" && c.kind == "inequality") best = std::max(best, c.ratio);
  CHECK(best == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pass rule") {
  const auto r = run_suite("kernel", small());
  CHECK_FALSE(r.cases.empty());
  for (const auto& c : r.cases) {
    if (c.kind == "measured") {
      CHECK(c.pass == (std::isfinite(c.lhs) && c.lhs > 0.0));
    } else {
      CHECK(c.pass == (std::isfinite(c.lhs) && c.lhs <= c.bound * (1.0 + c.slack)));
    }
  }
}

TEST_CASE("reports are deterministic and timing stays outside the payload") {
  const auto a = run_suite("translation", small()), b = run_suite("translation", small());
  CHECK(a.payload_json() == b.payload_json());
  const auto pa = json::parse(a.payload_json());
  CHECK_FALSE(pa.contains("timing"));
  const auto full = json::parse(a.to_json());
  CHECK(full.contains("timing"));
  json stripped = full;
  stripped.erase("timing");
  CHECK(stripped == pa);
  CHECK(pa["summary"]["cases"] == a.cases.size());
  CHECK(pa["config"]["seed"] == 7);
  CHECK(pa["cases"][0].contains("statement"));
}

TEST_CASE("seed changes random draws") {
  SuiteConfig c = small();
  c.kappas = {0.5};
  const auto a = run_suite("kernel", c);
  c.seed = 8;
  const auto b = run_suite("kernel", c);
  CHECK(a.payload_json() != b.payload_json());
}

TEST_CASE("stability cases record constants") {
  SuiteConfig c = small();
  c.kappas = {0.5};
  c.exponents = {ExponentTriple::parse("2,8,4")};
  const auto r = run_suite("theorem_maxi", c);
  REQUIRE(r.constants.size() == 1);
  CHECK(r.constants[0].statement == "maximal_fofana_bound");
  CHECK(std::isfinite(r.constants[0].fine));
  CHECK(std::isfinite(r.constants[0].coarse));
  c.refine = false;
  const auto nr = run_suite("theorem_maxi", c);
  CHECK(std::isnan(nr.constants[0].coarse));
  CHECK(json::parse(nr.payload_json())["constants"][0]["coarse"].is_null());
}
