#include <doctest.h>

#include "support/random_instances.hpp"
#include "tracehom/error.hpp"
#include "tracehom/problem_io.hpp"

using namespace tracehom;

namespace {

std::string data_file(const std::string& name) { return std::string(TRACEHOM_DATA_DIR) + "/" + name; }

std::vector<std::string> problems_of(std::string_view text) {
  try {
    parse_problem(text, "test.json");
  } catch (const ValidationError& e) {
    return e.problems();
  }
  return {};
}

}  // namespace

TEST_CASE("parsing a complete problem") {
  const auto p = parse_problem(R"({
    "generators": ["a", "b"],
    "independence": [["a", "b"]],
    "elements": ["x0"],
    "action": {"x0": {"a": "*", "b": "*"}}
  })");
  CHECK(p.alphabet.size() == 2);
  REQUIRE(p.mset);
  CHECK(p.mset->element_count() == 1);
  CHECK(p.mset->act(0, 1) == p.mset->basepoint());
}

TEST_CASE("alphabet-only problems") {
  const auto p = parse_problem(R"({"generators": ["a"], "independence": []})");
  CHECK_FALSE(p.mset);
  CHECK(parse_problem(R"({"generators": []})").alphabet.empty());
}

TEST_CASE("diagnostics name the offending field") {
  SUBCASE("JSON syntax error has a position") {
    const auto list = problems_of("{\"generators\": [\"a\",]}");
    REQUIRE(list.size() == 1);
    CHECK(list[0].find("test.json") == 0);
    CHECK(list[0].find("line 1") != std::string::npos);
  }
  SUBCASE("wrong types are all reported") {
    const auto list = problems_of(R"({"generators": ["a", 3], "independence": [["a"]], "extra": 1})");
    CHECK(list.size() == 3);
  }
  SUBCASE("action cell") {
    const auto list = problems_of(R"({"generators": ["b"], "elements": ["x0"], "action": {"x0": {"b": 7}}})");
    REQUIRE(list.size() == 1);
    CHECK(list[0].find("action[\"x0\"][\"b\"]") != std::string::npos);
  }
  SUBCASE("missing generators key") {
    const auto list = problems_of(R"({"independence": []})");
    REQUIRE_FALSE(list.empty());
    CHECK(list[0].find("generators: required") != std::string::npos);
  }
  SUBCASE("top level must be an object") { CHECK(problems_of("[]").size() == 1); }
}

TEST_CASE("loading files from disk") {
  SUBCASE("missing action entry") {
    CHECK_THROWS_WITH_AS(load_problem(data_file("malformed_missing_cell.json")),
                         doctest::Contains("missing action entry (x0, b)"), ValidationError);
  }
  SUBCASE("nonexistent file") {
    CHECK_THROWS_WITH_AS(load_problem(data_file("no_such_file.json")), doctest::Contains("cannot open"),
                         ValidationError);
  }
  SUBCASE("shipped examples parse") {
    for (const char* name : {"x0_four_cycle.json", "hub_four_cycle.json", "chain_four_cycle.json",
                             "fan_four_cycle.json", "partial_action.json", "monoid_free_commutative_2.json",
                             "monoid_free_commutative_4.json", "rp2_x0.json"}) {
      CAPTURE(name);
      CHECK(load_problem(data_file(name)).mset.has_value());
    }
    for (const char* name : {"four_cycle_alphabet.json", "complete3_alphabet.json", "single_generator_alphabet.json",
                             "empty_alphabet.json"}) {
      CAPTURE(name);
      CHECK_FALSE(load_problem(data_file(name)).mset.has_value());
    }
  }
}

TEST_CASE("problems round-trip through JSON") {
  testing::Rng rng(59);
  for (int trial = 0; trial < 20; ++trial) {
    const auto alpha = testing::random_alphabet(rng, 1 + trial % 4, 0.5);
    const auto m = testing::random_mset(rng, alpha, 1 + trial % 4);
    const auto back = parse_problem(problem_to_json(m).dump());
    REQUIRE(back.mset);
    CHECK(back.alphabet.same_relation(alpha));
    const auto witness = iso_check(m, *back.mset);
    REQUIRE(witness);
    for (Point p = 0; p < m.point_count(); ++p) CHECK(back.mset->name((*witness)[p]) == m.name(p));
  }
}

TEST_CASE("homology reports round-trip through JSON") {
  const std::vector<AbelianGroup> groups{AbelianGroup::free(1), AbelianGroup(2, {Integer(2), Integer(4)}),
                                         AbelianGroup(0, {Integer("123456789012345678901234567890")})};
  const auto j = homology_to_json(groups, Coefficients::Punctured);
  CHECK(j.at("coefficients") == "punctured");
  CHECK(j.at("homology")[1].at("rank") == 2);
  CHECK(j.at("homology")[1].at("torsion") == nlohmann::json::array({2, 4}));
  CHECK(j.at("homology")[2].at("torsion")[0].is_string());
  CHECK(homology_from_json(nlohmann::json::parse(j.dump())) == groups);
}
