#include <doctest.h>

#include <fstream>

#include "support/random_instances.hpp"
#include "tracehom/problem_io.hpp"
#include "tracehom/schema.hpp"
#include "tracehom/theorems.hpp"

using namespace tracehom;

namespace {

const std::string kStar(kBasepoint);

IndependenceAlphabet four_cycle() {
  return validate_alphabet({{"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}});
}

IndependenceAlphabet complete(std::size_t n) {
  AlphabetDescription raw;
  for (std::size_t i = 0; i < n; ++i) raw.generators.push_back("g" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) raw.independence.push_back({raw.generators[i], raw.generators[j]});
  }
  return validate_alphabet(raw);
}

PointedMSet hub_tree(const IndependenceAlphabet& alpha) {
  return full_action_mset(alpha, {"x0", "x1", "x2", "x3"}, {"x1", kStar, "x1", "x1"});
}

AbelianGroup z(std::size_t r) { return AbelianGroup::free(r); }

std::vector<Integer> ints(std::initializer_list<long> values) {
  std::vector<Integer> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("group isomorphism compares primary decompositions") {
  CHECK(groups_isomorphic(AbelianGroup(0, ints({6})), AbelianGroup(0, ints({2, 3}))));
  CHECK_FALSE(groups_isomorphic(AbelianGroup(0, ints({4})), AbelianGroup(0, ints({2, 2}))));
  CHECK_FALSE(groups_isomorphic(z(1), z(2)));
  CHECK(groups_isomorphic(AbelianGroup(0, ints({1})), AbelianGroup::zero()));
}

TEST_CASE("direct sums and powers") {
  CHECK(direct_sum(z(2), AbelianGroup(1, ints({2}))) == AbelianGroup(3, ints({2})));
  CHECK(direct_sum(AbelianGroup(0, ints({2})), AbelianGroup(0, ints({3}))) == AbelianGroup(0, ints({6})));
  CHECK(power(AbelianGroup(1, ints({2})), 3) == AbelianGroup(3, ints({2, 2, 2})));
  CHECK(power(z(5), 0).is_zero());
}

TEST_CASE("verdict names") {
  CHECK(to_string(Verdict::Holds) == "PASS");
  CHECK(to_string(Verdict::Fails) == "FAIL");
  CHECK(to_string(Verdict::NotApplicable) == "N-A");
}

TEST_CASE("splitting off the basepoint") {
  SUBCASE("one-point set") {
    const auto r = check_lemma_split(one_point_set(four_cycle()));
    CHECK(r.holds());
    CHECK(r.claim == "split");
    REQUIRE(r.degrees.size() == 2);
    CHECK(r.degrees[0].degree == 1);
    CHECK(r.degrees[1].lhs == z(4));
  }
  SUBCASE("hub tree x0, x2, x3 -> x1 -> *") { CHECK(check_lemma_split(hub_tree(four_cycle())).holds()); }
  SUBCASE("applies without the tree condition") {
    const auto alpha = validate_alphabet({{"e1", "e2"}, {{"e1", "e2"}}});
    const auto partial = full_action_mset(alpha, {"x0", "x1"}, {"x1", "x0"});
    CHECK(check_lemma_split(partial).holds());
  }
  SUBCASE("degree limit") {
    const auto r = check_lemma_split(hub_tree(four_cycle()), 1);
    CHECK(r.degrees.size() == 1);
  }
}

TEST_CASE("power decomposition") {
  SUBCASE("X_0") { CHECK(check_prop_power(point_to_basepoint(four_cycle())).holds()); }
  SUBCASE("fan") {
    const auto alpha = complete(3);
    CHECK(check_prop_power(full_action_mset(alpha, {"x0", "x1", "x2"}, {kStar, kStar, kStar})).holds());
  }
  SUBCASE("hub tree x0, x2, x3 -> x1 -> *") {
    const auto r = check_prop_power(hub_tree(four_cycle()));
    CHECK(r.holds());
    REQUIRE(r.degrees.size() == 2);
    CHECK(r.degrees[1].lhs == z(4));
  }
  SUBCASE("not applicable to a cycle") {
    const auto alpha = validate_alphabet({{"e1", "e2"}, {{"e1", "e2"}}});
    const auto r = check_prop_power(full_action_mset(alpha, {"x0", "x1"}, {"x1", "x0"}));
    CHECK(r.verdict == Verdict::NotApplicable);
    CHECK(r.witness.has_value());
  }
}

TEST_CASE("main decomposition") {
  SUBCASE("X_0 over the four-cycle") {
    const auto r = check_theorem_main(point_to_basepoint(four_cycle()));
    CHECK(r.holds());
    REQUIRE(r.degrees.size() == 2);
    CHECK(r.degrees[0].lhs == z(4));
    CHECK(r.degrees[1].lhs == z(5));
  }
  SUBCASE("one-point set") {
    // No elements: the power is empty and H_s is the clique count.
    const auto r = check_theorem_main(one_point_set(four_cycle()));
    CHECK(r.holds());
  }
  SUBCASE("hub tree over a commuting pair") {
    const auto r = check_theorem_main(hub_tree(complete(2)));
    CHECK(r.holds());
    REQUIRE(r.degrees.size() == 2);
    CHECK(r.degrees[0].rhs == z(2));
    CHECK(r.degrees[1].rhs == z(1));
  }
  SUBCASE("hub tree over the four-cycle") {
    const auto r = check_theorem_main(hub_tree(four_cycle()));
    CHECK(r.holds());
    CHECK(r.degrees.back().lhs == z(8));
  }
  SUBCASE("not applicable to a partial action") {
    const auto alpha = validate_alphabet({{"e1", "e2"}, {{"e1", "e2"}}});
    const auto partial = validate_mset(
        {{"x0", "x1"}, {{"x0", {{"e1", "x1"}, {"e2", "*"}}}, {"x1", {{"e1", "*"}, {"e2", "*"}}}}}, alpha);
    CHECK(check_theorem_main(partial).verdict == Verdict::NotApplicable);
  }
}

TEST_CASE("reduced homology of the clique complex through X_0") {
  SUBCASE("complete on three") {
    const auto r = check_theorem_aug(complete(3));
    CHECK(r.holds());
    for (const auto& row : r.degrees) CHECK(row.lhs.is_zero());
  }
  SUBCASE("four-cycle") {
    const auto r = check_theorem_aug(four_cycle());
    CHECK(r.holds());
    REQUIRE(r.degrees.size() == 2);
    CHECK(r.degrees[1].lhs == z(1));
  }
  SUBCASE("flagified projective plane has 2-torsion in degree 2") {
    std::ifstream in(std::string(TRACEHOM_DATA_DIR) + "/rp2.faces");
    REQUIRE(in);
    const auto alpha = barycentric_flagification(parse_face_list(in));
    const auto r = check_theorem_aug(alpha);
    CHECK(r.holds());
    REQUIRE(r.degrees.size() == 3);
    CHECK(r.degrees[1].lhs == AbelianGroup(0, ints({2})));
    CHECK(r.degrees[2].lhs.is_zero());
  }
}

TEST_CASE("chain and fan") {
  SUBCASE("single generator") {
    const auto report = counterexample_report(validate_alphabet({{"e"}, {}}));
    CHECK(report.non_isomorphic());
    CHECK(report.homology_equal);
    CHECK(report.confirmed());
    CHECK(report.chain_delta == report.fan_delta);
  }
  SUBCASE("four-cycle") {
    const auto report = counterexample_report(four_cycle());
    CHECK(report.confirmed());
    CHECK(report.chain_delta == std::vector<AbelianGroup>{z(1), z(4), z(6)});
    CHECK(report.chain_punctured == std::vector<AbelianGroup>{z(0), z(0), z(2)});
  }
  SUBCASE("empty alphabet collapses the pair") {
    const auto report = counterexample_report(validate_alphabet({}));
    CHECK_FALSE(report.non_isomorphic());
    CHECK_FALSE(report.confirmed());
  }
}

TEST_CASE("decompositions hold on random instances") {
  testing::Rng rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const auto alpha = testing::random_alphabet(rng, 1 + trial % 5, 0.6);
    const auto any = testing::random_mset(rng, alpha, 1 + trial % 4);
    CHECK(check_lemma_split(any).holds());

    const auto tree = testing::random_tree_mset(rng, alpha, 1 + trial % 4);
    CHECK(check_prop_power(tree).holds());
    CHECK(check_theorem_main(tree).holds());
    CHECK(check_theorem_aug(alpha).holds());

    const auto report = counterexample_report(alpha);
    CHECK(report.confirmed());
  }
}
