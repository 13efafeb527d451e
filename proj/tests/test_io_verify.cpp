#include "doctest.h"

#include "braidperm/io.hpp"
#include "braidperm/verify.hpp"

using namespace braidperm;

TEST_CASE("spec JSON roundtrip")
{
  auto const j = json::parse(R"j({"d": 2, "tau": "()", "u": [[1, 2], [2, 1]],
                                 "choices": [{"alpha_min": 1, "i1": 1, "j1": 2},
                                             {"alpha_min": 2, "i1": 2, "j1": 1}]})j");
  auto const spec = spec_from_json(j);
  CHECK(print_cycles(build_sigma(spec)) == "(1 4)(2 3)");
  CHECK(spec_from_json(spec_to_json(spec)) == spec);

  auto const defaults = spec_from_json(json::parse(R"j({"d": 3, "tau": "(1 3 2)"})j"));
  CHECK(defaults.choices[0] == InitialChoice{1, 1});

  CHECK_THROWS_AS(spec_from_json(json::parse(R"j({"tau": "()"})j")), InvalidSpec);
  CHECK_THROWS_AS(spec_from_json(json::parse(R"j({"d": 2, "tau": "(1 2)",
      "choices": [{"alpha_min": 2, "i1": 1, "j1": 1}]})j")), InvalidSpec);
  CHECK_THROWS_AS(spec_from_json(json::parse(R"j({"d": 2, "tau": "(1 2)",
      "choices": [{"alpha_min": 1, "i1": 1, "j1": 5}]})j")), InvalidSpec);
  CHECK_THROWS_AS(spec_from_json(json::parse(R"j({"d": 2, "tau": "(1 5)"})j")), InvalidSpec);
  CHECK_THROWS_AS(spec_from_json(json::parse(R"j({"d": 2, "tau": "(1 2"})j")), ParseError);
}

TEST_CASE("spec from text")
{
  CHECK(print_cycles(build_sigma(spec_from_text(2, "(1 2)", "id", {1}, {1}))) == "(1 3 2 4)");
  CHECK(print_cycles(build_sigma(spec_from_text(2, "()", "(1 2)"))) == "(1 4)(2 3)");
  CHECK(print_cycles(build_sigma(spec_from_text(2, "()", "(1 2)", {1, 2}, {2, 1}))) ==
        "(1 4)(2 3)");
  CHECK_THROWS_AS(spec_from_text(2, "(1 2)", "id", {1}, {3}), InvalidSpec);
  CHECK_THROWS_AS(spec_from_text(2, "(1 2)", "id", {1, 2}, {1}), InvalidSpec);
  CHECK_THROWS_AS(spec_from_text(3, "(1 2)", "(1 3)"), InvalidSpec);
  CHECK_THROWS_AS(spec_from_text(0, "()", "id"), InvalidSpec);
}

TEST_CASE("image and matrix JSON")
{
  auto const img = braid_image(parse_cycles("(1 3 2 4)"), 2, 3);
  auto const j = image_to_json(img);
  CHECK(j["generators"] == json::array({"(1 3 2 4)", "(3 5 4 6)"}));
  CHECK(j["q"] == 2);
  auto const m = matrix_to_json(ModuleMatrix::identity(3, 3));
  CHECK(m["entries"] == json::array({1, 0, 0, 0, 1, 0, 0, 0, 1}));
  CHECK(m["last_row_modulus"] == 3);
  // For q = 2 the last coordinate lives in Z/1.
  auto const even = matrix_to_json(ModuleMatrix::identity(3, 2));
  CHECK(even["entries"] == json::array({1, 0, 0, 0, 1, 0, 0, 0, 0}));
  CHECK(even["last_row_modulus"] == 1);
}

TEST_CASE("claim table")
{
  CHECK(resolve_claim("thm-2.12") == "thm-2.12");
  CHECK(resolve_claim("monodromy") == "prop-3.11");
  CHECK_THROWS_AS(resolve_claim("thm-9.9"), std::invalid_argument);
  std::set<std::string> ids;
  for (auto const &c : claim_table())
    CHECK(ids.insert(c.id).second);
}

TEST_CASE("configuration validation")
{
  VerifyConfig bad;
  bad.degrees = {6};
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad.degrees = {2};
  bad.strands = {2};
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad.strands = {3};
  bad.claims = {"nope"};
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  bad.claims.clear();
  bad.degrees.clear();
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("reports are deterministic and complete")
{
  VerifyConfig config;
  config.degrees = {1, 2, 3};
  config.strands = {3};
  config.random_instances = 50;
  config.seed = 42;
  auto const a = run_verification(config).to_json().dump();
  auto const b = run_verification(config).to_json().dump();
  CHECK(a == b);

  auto const j = json::parse(a);
  CHECK(j["schema"] == 1);
  CHECK(j["seed"] == 42);
  std::set<std::string> claims;
  for (auto const &e : j["entries"]) {
    claims.insert(e["claim"].get<std::string>());
    CHECK(e.contains("parameters"));
    CHECK(e.contains("witness"));
  }
  for (auto const &c : claim_table())
    CHECK(claims.contains(c.id) == c.in_default_run);

  config.seed = 43;
  CHECK(run_verification(config).to_json().dump() != a);
}

TEST_CASE("a single claim")
{
  VerifyConfig config;
  config.degrees = {2};
  config.strands = {4};
  config.claims = {"prop-3.11"};
  auto const report = run_verification(config);
  CHECK(report.all_pass());
  bool saw_kernel = false;
  for (auto const &e : report.entries) {
    CHECK(e.claim == "prop-3.11");
    saw_kernel = saw_kernel || e.check == "kernel-trivial";
  }
  CHECK(saw_kernel);
  CHECK(report.to_text().find("PASS prop-3.11 kernel-trivial") != std::string::npos);
}
