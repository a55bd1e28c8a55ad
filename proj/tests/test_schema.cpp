#include <doctest.h>

#include <fstream>
#include <sstream>

#include "support/random_instances.hpp"
#include "tracehom/chains.hpp"
#include "tracehom/error.hpp"
#include "tracehom/schema.hpp"

using namespace tracehom;

namespace {

using Faces = std::vector<std::vector<std::string>>;

Faces load_faces(const std::string& name) {
  std::ifstream in(std::string(TRACEHOM_DATA_DIR) + "/" + name);
  REQUIRE(in);
  return parse_face_list(in);
}

std::vector<AbelianGroup> groups(std::initializer_list<AbelianGroup> list) { return list; }

const AbelianGroup kZero = AbelianGroup::zero();
const AbelianGroup kZ = AbelianGroup::free(1);

}  // namespace

TEST_CASE("clique complex of the four-cycle") {
  const auto alpha = validate_alphabet({{"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}});
  const auto s = clique_complex(alpha);
  CHECK(s.dimension() == 1);
  CHECK(s.count(0) == 4);
  CHECK(s.count(1) == 4);
  CHECK(reduced_homology(s) == groups({kZero, kZ}));
  CHECK(unreduced_homology(s) == groups({kZ, kZ}));
  CHECK_NOTHROW(check_closed_under_faces(s));
}

TEST_CASE("small schemas") {
  SUBCASE("empty") {
    const auto s = clique_complex(validate_alphabet({}));
    CHECK(s.empty());
    CHECK(reduced_homology(s).empty());
  }
  SUBCASE("single vertex") {
    const auto s = schema_from_faces({{"v"}});
    CHECK(reduced_homology(s) == groups({kZero}));
    CHECK(unreduced_homology(s) == groups({kZ}));
  }
  SUBCASE("two vertices") {
    const auto s = schema_from_faces({{"v"}, {"w"}});
    CHECK(reduced_homology(s) == groups({kZ}));
    CHECK(unreduced_homology(s) == groups({AbelianGroup::free(2)}));
  }
  SUBCASE("full simplex on four vertices") {
    const auto s = schema_from_faces({{"a", "b", "c", "d"}});
    CHECK(s.count(0) == 4);
    CHECK(s.count(1) == 6);
    CHECK(s.count(2) == 4);
    CHECK(s.count(3) == 1);
    CHECK(reduced_homology(s) == groups({kZero, kZero, kZero, kZero}));
  }
  SUBCASE("boundary of the tetrahedron is a sphere") {
    const auto s = schema_from_faces({{"a", "b", "c"}, {"a", "b", "d"}, {"a", "c", "d"}, {"b", "c", "d"}});
    CHECK(reduced_homology(s) == groups({kZero, kZero, kZ}));
  }
}

TEST_CASE("face list validation") {
  CHECK_THROWS_AS(schema_from_faces({{"a", "a"}}), ValidationError);
  CHECK_THROWS_AS(schema_from_faces({{}}), ValidationError);

  std::istringstream bad("a b\n\n# comment\nc c\n");
  CHECK_THROWS_WITH_AS(parse_face_list(bad), doctest::Contains("line 4"), ValidationError);

  SimplicialSchema missing_face{{"a", "b"}, {{Clique{{0}}}, {Clique{{0, 1}}}}};
  CHECK_THROWS_AS(check_closed_under_faces(missing_face), ValidationError);
}

TEST_CASE("barycentric flagification preserves homology") {
  SUBCASE("filled triangle") {
    const auto faces = load_faces("triangle.faces");
    const auto alpha = barycentric_flagification(faces);
    CHECK(alpha.size() == 7);
    CHECK(reduced_homology(clique_complex(alpha)) == groups({kZero, kZero, kZero}));
  }
  SUBCASE("hollow triangle") {
    const auto faces = load_faces("hollow_triangle.faces");
    const auto alpha = barycentric_flagification(faces);
    CHECK(alpha.size() == 6);
    CHECK(reduced_homology(clique_complex(alpha)) == groups({kZero, kZ}));
  }
  SUBCASE("real projective plane") {
    const auto faces = load_faces("rp2.faces");
    const auto direct = reduced_homology(schema_from_faces(faces));
    const auto alpha = barycentric_flagification(faces);
    CHECK(alpha.size() == 31);
    CHECK(clique_counts(alpha) == std::vector<std::size_t>{1, 31, 90, 60});
    const auto flagged = reduced_homology(clique_complex(alpha));
    CHECK(flagged == direct);
    REQUIRE(flagged.size() == 3);
    CHECK(flagged[0].is_zero());
    CHECK(flagged[1] == AbelianGroup(0, {Integer(2)}));
    CHECK(flagged[2].is_zero());
  }
}

TEST_CASE("punctured X_0 homology is the shifted reduced homology of the clique complex") {
  // Two independent implementations of the same boundary: the chain complex
  // of the pointed set and the augmented simplicial complex.
  testing::Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const auto alpha = testing::random_alphabet(rng, 1 + trial % 6, 0.2 + 0.1 * (trial % 7));
    const auto via_chains = homology(point_to_basepoint(alpha), Coefficients::Punctured);
    const auto via_schema = reduced_homology(clique_complex(alpha));
    REQUIRE(via_chains.size() == via_schema.size() + 1);
    CHECK(via_chains[0].is_zero());
    for (std::size_t n = 1; n < via_chains.size(); ++n) CHECK(via_chains[n] == via_schema[n - 1]);
  }
}

TEST_CASE("Euler relation for clique complexes") {
  testing::Rng rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const auto alpha = testing::random_alphabet(rng, 1 + trial % 7, 0.5);
    const auto counts = clique_counts(alpha);
    const auto h = reduced_homology(clique_complex(alpha));
    long chi_counts = 0, chi_homology = 0;
    for (std::size_t k = 1; k < counts.size(); ++k) chi_counts += (k % 2 == 1 ? 1 : -1) * static_cast<long>(counts[k]);
    for (std::size_t k = 0; k < h.size(); ++k) {
      chi_homology += (k % 2 == 0 ? 1 : -1) * static_cast<long>(h[k].free_rank());
    }
    CHECK(chi_counts - 1 == chi_homology);
  }
}
