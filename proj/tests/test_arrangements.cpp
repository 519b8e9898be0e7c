#include <doctest.h>

#include "loophom/arrangements.hpp"

using namespace loophom;

TEST_CASE("arrangement dictionary cases") {
  auto K = polygon(3);
  SUBCASE("unit multidegree gives the complex's own missing faces") {
    auto a = multidegree_to_arrangement(K, MultiDegree({1, 1, 1}));
    CHECK(a.which == ArrangementDescription::Case::kUnitMultidegree);
    CHECK(a.ambient_dim == 3);
    REQUIRE(a.diagonal_blocks.size() == 1);
    CHECK(a.diagonal_blocks[0] == std::vector<int>{1, 2, 3});
    CHECK(a.chambers.empty());
  }
  SUBCASE("square-free multidegree restricts to the full subcomplex") {
    auto a = multidegree_to_arrangement(K, MultiDegree({1, 0, 1}));
    CHECK(a.which == ArrangementDescription::Case::kSubcomplex);
    CHECK(a.ambient_dim == 2);
    CHECK(a.diagonal_blocks.empty());  // the edge {1,3} is a face
  }
  SUBCASE("higher multidegree substitutes point sets and cuts chambers") {
    auto a = multidegree_to_arrangement(full_simplex(2), MultiDegree({2, 1}));
    CHECK(a.which == ArrangementDescription::Case::kChambers);
    CHECK(a.ambient_dim == 3);
    REQUIRE(a.diagonal_blocks.size() == 1);
    CHECK(a.diagonal_blocks[0] == std::vector<int>{1, 2});  // the doubled color
    REQUIRE(a.chambers.size() == 1);
    CHECK(a.chambers[0].color == 1);
    CHECK(a.chambers[0].coordinates == std::vector<int>{1, 2});
  }
  SUBCASE("square-free case agrees with the unit case of the subcomplex") {
    auto a = multidegree_to_arrangement(polygon(4), MultiDegree({1, 0, 1, 0}));
    auto L = full_subcomplex(polygon(4), face_of({1, 3}));
    auto b = multidegree_to_arrangement(L, MultiDegree({1, 1}));
    CHECK(a.diagonal_blocks == b.diagonal_blocks);
    CHECK(a.ambient_dim == b.ambient_dim);
  }
}

TEST_CASE("suspension dictionary: missing faces gain the apex") {
  auto K = polygon(4);
  auto S = sigma_suspension(K);
  auto mk = missing_faces(K);
  auto ms = missing_faces(S);
  REQUIRE(mk.size() == ms.size());
  Face apex = Face{1} << K.vertex_count();
  for (std::size_t i = 0; i < mk.size(); ++i) CHECK(ms[i] == (mk[i] | apex));
}

TEST_CASE("no-3-equal enumeration at small arity") {
  SUBCASE("(3,3) degrees 0 and 1") {
    auto counts = no_k_equal_betti_by_enumeration(3, 3);
    CHECK(counts.at(0) == 1);
    CHECK(counts.at(1) == 1);
  }
  SUBCASE("(4,3): Euler characteristic forced to -6") {
    auto cmp = no_k_equal_comparison(4, 3);
    CHECK(cmp.all_match);
    long long b0 = 0, b1 = 0, b2 = 0;
    for (const auto& r : cmp.rows) {
      if (r.degree == 0) b0 = r.snf_rank;
      if (r.degree == 1) b1 = r.snf_rank;
      if (r.degree == 2) b2 = r.snf_rank;
    }
    CHECK(b0 == 1);
    CHECK(b1 == 7);
    CHECK(b2 == 0);
    CHECK(b0 - b1 + b2 == -6);
  }
  SUBCASE("printed direction fails the same comparison") {
    auto cmp = no_k_equal_comparison(4, 3, NoEqualInterpretation::kVacuousWhenEmpty,
                                     NoEqualDirection::kAsPrinted);
    CHECK(!cmp.all_match);
  }
  SUBCASE("nonempty interpretation fails already at (3,3)") {
    auto cmp = no_k_equal_comparison(3, 3, NoEqualInterpretation::kRequireNonempty);
    CHECK(!cmp.all_match);
  }
}

TEST_CASE("shifted torsion scans") {
  CHECK(shifted_torsion_report(skeleton_of_simplex(4, 1), 4).torsion_free());
  CHECK(shifted_torsion_report(vertices_only(4), 4).torsion_free());
  CHECK(shifted_torsion_report(full_simplex(3), 4).torsion_free());
  CHECK_THROWS_AS(shifted_torsion_report(polygon(4), 3), std::invalid_argument);
}
