#include <doctest.h>

#include "loophom/coalgebra.hpp"

using namespace loophom;

TEST_CASE("point coalgebra") {
  auto C = exterior_sr_coalgebra(full_simplex(1));
  CHECK(C.dim() == 2);
  CHECK(C.element(C.counit_index()).degree == 0);
  int v = C.index_of_mdeg(MultiDegree({1}));
  CHECK(v >= 0);
  CHECK(C.reduced_coproduct(v).empty());
}

TEST_CASE("edge coalgebra reduced coproduct, unit degrees") {
  auto C = exterior_sr_coalgebra(full_simplex(2));
  int v12 = C.index_of_mdeg(MultiDegree({1, 1}));
  int v1 = C.index_of_mdeg(MultiDegree({1, 0}));
  int v2 = C.index_of_mdeg(MultiDegree({0, 1}));
  REQUIRE(v12 >= 0);
  const auto& terms = C.reduced_coproduct(v12);
  REQUIRE(terms.size() == 2);
  // Delta(v_12) = v_1 x v_2 - v_2 x v_1
  for (const auto& t : terms) {
    if (t.left == v1) {
      CHECK(t.right == v2);
      CHECK(t.coeff == 1);
    } else {
      CHECK(t.left == v2);
      CHECK(t.right == v1);
      CHECK(t.coeff == -1);
    }
  }
}

TEST_CASE("edge coalgebra with doubled degrees is cocommutative") {
  auto C = exterior_sr_coalgebra(full_simplex(2), {2, 2});
  int v12 = C.index_of_mdeg(MultiDegree({1, 1}));
  const auto& terms = C.reduced_coproduct(v12);
  REQUIRE(terms.size() == 2);
  CHECK(terms[0].coeff == 1);
  CHECK(terms[1].coeff == 1);  // kappa({2},{1}) = 4, even
  CHECK(C.is_coassociative());
  CHECK(C.element(v12).degree == 4);
}

TEST_CASE("coalgebra invariants on small complexes (m <= 6)") {
  std::vector<SimplicialComplex> cases = {polygon(3), polygon(4),
                                          skeleton_of_simplex(4, 1),
                                          full_simplex(3), octahedron(3)};
  for (const auto& K : cases) {
    auto C = exterior_sr_coalgebra(K);
    CHECK(C.dim() == K.face_count());
    CHECK(C.is_coassociative());
    CHECK(C.is_grading_additive());
  }
  auto C = exterior_sr_coalgebra(polygon(4), {1, 2, 3, 4});
  CHECK(C.is_coassociative());
  CHECK(C.is_grading_additive());
}

TEST_CASE("non-positive degree assignments are rejected") {
  CHECK_THROWS_AS(exterior_sr_coalgebra(full_simplex(2), {1, 0}),
                  std::invalid_argument);
}

TEST_CASE("tuple coalgebra") {
  auto K = full_simplex(1);
  auto C = tuple_coalgebra(K, MultiDegree({3}));
  CHECK(C.dim() == 4);  // 0,1,2,3
  int y2 = C.index_of_mdeg(MultiDegree({2}));
  REQUIRE(y2 >= 0);
  CHECK(C.element(y2).degree == 2);
  CHECK(C.reduced_coproduct(y2).size() == 1);  // (1)+(1) split only
  CHECK(C.is_coassociative());
  CHECK(C.is_grading_additive());

  // supports must be faces: V[2] admits no mixed tuples
  auto D = tuple_coalgebra(vertices_only(2), MultiDegree({2, 2}));
  CHECK(D.index_of_mdeg(MultiDegree({1, 1})) == -1);
  CHECK(D.index_of_mdeg(MultiDegree({2, 0})) >= 0);
  CHECK(D.is_coassociative());
}
