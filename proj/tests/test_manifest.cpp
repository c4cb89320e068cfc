#include <doctest.h>

#include <cstdlib>

#include "hermitia/runner.hpp"
#include "support.hpp"

using namespace hermitia;
using namespace testing;

namespace {

// Kodaira-Thurston: h3 x R with J e1 = e4, J e2 = e3.
const char* kt_manifest = R"json({
  "schema": "hermitia-manifest/1",
  "name": "kt",
  "symbols": [{"name": "s2", "power": 2, "relation": "2", "sign": "positive"}],
  "basis": ["e1", "e2", "e3", "e4"],
  "differential": {"e1": "e2^e3"},
  "endomorphisms": {"J": {"matrix": [["0","0","0","-1"],["0","0","-1","0"],["0","1","0","0"],["1","0","0","0"]]}},
  "bilinears": {"g": {"matrix": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]}},
  "forms": {"omega": "e1^e4 + e2^e3", "w2": "omega^2"},
  "valuations": {"default": {"s2": "1.41421356"}},
  "checks": [
    {"id": "omega-not-kahler", "kind": "kahler", "params": {"structure": "J", "form": "omega"}, "expect": {"holds": false}},
    {"id": "J-int", "kind": "integrable", "params": {"structure": "J"}},
    {"id": "d-omega", "kind": "differential", "params": {"form": "omega"}, "expect": {"equals": "e2^e3^e4"}},
    {"id": "w2-closed", "kind": "differential", "params": {"form": "w2"}, "expect": {"zero": true}},
    {"id": "gram", "kind": "signature", "params": {"bilinear": "g"}, "expect": {"signature": "(4,0,0)"}},
    {"id": "omega-pos", "kind": "positivity_falsify", "params": {"structure": "J", "form": "s2*omega", "samples": 200}},
    {"id": "pell", "kind": "classify", "params": {"matrix": [[3,4],[2,3]], "gram": [[1,0],[0,-2]]}, "expect": {"type": "hyperbolic"}},
    {"id": "wrong-but-informational", "kind": "kahler", "params": {"structure": "J", "form": "omega"}, "informational": true}
  ]
})json";

Manifest kt() { return parse_manifest(kt_manifest); }

RunOptions quiet(std::uint64_t seed = default_seed) {
  RunOptions o;
  o.seed = seed;
  o.timing = false;
  return o;
}

}  // namespace

TEST_CASE("manifest parsing and schema errors") {
  Manifest m = kt();
  CHECK(m.name == "kt");
  CHECK(m.checks.size() == 8);
  CHECK(m.symbols[0].power == 2);
  CHECK(m.bilinears[0].second[0][0] == "1");

  try {
    parse_manifest("{\"schema\": }");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 11);
  }
  CHECK_THROWS_AS(parse_manifest("[1, 2"), ParseError);

  Json j = Json::parse(kt_manifest);
  j["extra"] = 1;
  CHECK_THROWS_AS(manifest_from_json(j), ManifestError);
  j = Json::parse(kt_manifest);
  j["checks"][0]["kind"] = "hyperkahler";
  CHECK_THROWS_AS(manifest_from_json(j), ManifestError);
  j = Json::parse(kt_manifest);
  j["schema"] = "hermitia-manifest/0";
  CHECK_THROWS_AS(manifest_from_json(j), ManifestError);
  j = Json::parse(kt_manifest);
  j["differential"]["e7"] = "e1^e2";
  CHECK_THROWS_AS(manifest_from_json(j), ManifestError);
  j = Json::parse(kt_manifest);
  j["checks"][1]["id"] = "omega-not-kahler";
  CHECK_THROWS_AS(manifest_from_json(j), ManifestError);
  j = Json::parse(kt_manifest);
  j["symbols"][0].erase("power");
  CHECK_THROWS_AS(manifest_from_json(j), ManifestError);

  CHECK(check_kind_names().size() == 29);
  for (const auto& n : check_kind_names()) CHECK(to_string(parse_check_kind(n)) == n);
}

TEST_CASE("emit and re-parse is the identity") {
  Manifest m = kt();
  const std::string text = emit_manifest(m);
  CHECK(emit_manifest(parse_manifest(text)) == text);
  CHECK(text.back() == '\n');
}

TEST_CASE("rational matrices") {
  RationalMatrix m = parse_rational_matrix(std::string_view(R"([["3/4", 1], ["-2", "0"]])"));
  CHECK(m(0, 0) == Rational(3, 4));
  CHECK(m(1, 0) == Rational(-2));
  CHECK_THROWS_AS(parse_rational_matrix(std::string_view("[[1, 2], [3]]")), ManifestError);
  CHECK_THROWS_AS(parse_rational_matrix(std::string_view("[[1, \"x\"]]")), Error);
}

TEST_CASE("running a manifest") {
  Report r = run_checks(kt(), quiet());
  REQUIRE(r.checks.size() == 9);
  CHECK(r.checks[0].id == "jacobi");
  CHECK(r.checks[1].id == "J-int");
  for (const auto& c : r.checks) {
    INFO(c.id << ": " << c.message);
    if (c.id == "omega-pos") CHECK(c.verdict == Verdict::inconclusive);
    else if (c.id == "wrong-but-informational") CHECK(c.verdict == Verdict::fail);
    else CHECK(c.verdict == Verdict::pass);
  }
  // the inconclusive sampler is not informational, so the run fails
  CHECK_FALSE(r.passed());
  CHECK(exit_code(r) == 1);

  Manifest m = kt();
  m.checks[5].expect = {{"violation", false}};
  Report ok = run_checks(m, quiet());
  CHECK(ok.passed());
  CHECK(exit_code(ok) == 0);
  Json j = ok.to_json();
  CHECK(j["schema"] == "hermitia-report/1");
  CHECK(j["overall"] == "pass");
  CHECK(j["summary"]["fail"] == 1);
  CHECK_FALSE(j["checks"][0].contains("time_ms"));
  CHECK(j["checks"][8]["informational"] == true);
  CHECK(ok.to_text().find("overall: pass") != std::string::npos);
}

TEST_CASE("unsupported expectations and bad parameters are errors") {
  Manifest m = kt();
  m.checks[2].expect["colour"] = "blue";
  m.checks[4].params.erase("bilinear");
  Report r = run_checks(m, quiet());
  for (const auto& c : r.checks) {
    if (c.id == "d-omega") {
      CHECK(c.verdict == Verdict::error);
      CHECK(c.message.find("colour") != std::string::npos);
    }
    if (c.id == "gram") CHECK(c.verdict == Verdict::error);
  }
  CHECK_FALSE(r.passed());
}

TEST_CASE("a failing Jacobi identity") {
  Manifest m = kt();
  m.differential.emplace_back("e2", "e1^e4");
  Report r = run_checks(m, quiet());
  CHECK(r.checks[0].verdict == Verdict::fail);
  CHECK(r.checks[0].result.contains("witness"));
  CHECK(exit_code(r) == 1);
}

TEST_CASE("--only and seeds") {
  RunOptions o = quiet();
  o.only = "pell";
  Report r = run_checks(kt(), o);
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].id == "pell");
  o.only = "nope";
  CHECK_THROWS_AS(run_checks(kt(), o), ManifestError);

  const std::string a = run_checks(kt(), quiet(3)).to_json().dump(2);
  const std::string b = run_checks(kt(), quiet(3)).to_json().dump(2);
  CHECK(a == b);

  ::setenv("HERMITIA_SEED", "42", 1);
  CHECK(seed_from_environment() == 42);
  ::setenv("HERMITIA_SEED", "junk", 1);
  CHECK(seed_from_environment() == default_seed);
  ::unsetenv("HERMITIA_SEED");
  CHECK(seed_from_environment() == default_seed);
}

TEST_CASE("builtins pass in process and after a round trip") {
  for (const auto& name : builtin_names()) {
    INFO(name);
    Report direct = run_checks(builtin(name), quiet());
    for (const auto& c : direct.checks) {
      INFO(c.id << ": " << c.message);
      CHECK(c.verdict == Verdict::pass);
    }
    Report again = run_checks(parse_manifest(emit_manifest(builtin(name))), quiet());
    CHECK(again.to_json().dump() == direct.to_json().dump());
  }
}
