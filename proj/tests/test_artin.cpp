#include <doctest.h>

#include <algorithm>
#include <set>

#include "loophom/artin.hpp"
#include "loophom/homology.hpp"

using namespace loophom;

TEST_CASE("normal forms") {
  auto edge = full_simplex(2);
  CHECK(artin_normal_form(edge, {2, 1}) == std::vector<int>{1, 2});
  auto disjoint = vertices_only(2);
  CHECK(artin_normal_form(disjoint, {2, 1}) == std::vector<int>{2, 1});

  auto path = SimplicialComplex::from_facets(3, {face_of({1, 2}), face_of({2, 3})});
  CHECK(artin_normal_form(path, {1, 2, 3}) == std::vector<int>{1, 2, 3});
  CHECK(artin_normal_form(path, {2, 1, 3}) == std::vector<int>{1, 2, 3});
  CHECK(artin_normal_form(path, {1, 3, 2}) == std::vector<int>{1, 2, 3});
  CHECK(artin_normal_form(path, {3, 2, 1}) == std::vector<int>{2, 3, 1});
  // idempotent
  auto nf = artin_normal_form(path, {3, 1, 2});
  CHECK(artin_normal_form(path, nf) == nf);
  CHECK_THROWS_AS(artin_normal_form(path, {4}), std::invalid_argument);
}

TEST_CASE("counts by multidegree") {
  auto edge = full_simplex(2);
  CHECK(artin_count_by_multidegree(edge, MultiDegree({1, 1})) == 1);
  auto disjoint = vertices_only(2);
  CHECK(artin_count_by_multidegree(disjoint, MultiDegree({1, 1})) == 2);
  auto path = SimplicialComplex::from_facets(3, {face_of({1, 2}), face_of({2, 3})});
  CHECK(artin_count_by_multidegree(path, MultiDegree({1, 1, 1})) == 2);
}

TEST_CASE("counts equal the number of normal forms among all words") {
  auto path = SimplicialComplex::from_facets(3, {face_of({1, 2}), face_of({2, 3})});
  MultiDegree I({2, 1, 1});
  // enumerate all words with content I and count distinct normal forms
  std::vector<int> letters;
  for (int j = 1; j <= 3; ++j)
    for (int k = 0; k < I[j - 1]; ++k) letters.push_back(j);
  std::sort(letters.begin(), letters.end());
  std::set<std::vector<int>> classes;
  do {
    classes.insert(artin_normal_form(path, letters));
  } while (std::next_permutation(letters.begin(), letters.end()));
  CHECK(static_cast<long long>(classes.size()) ==
        artin_count_by_multidegree(path, I));
}

TEST_CASE("complete 1-skeleton gives one class per multidegree") {
  auto K = skeleton_of_simplex(4, 1);
  for (const auto& I : multidegrees_up_to(4, 4))
    CHECK(artin_count_by_multidegree(K, I) == 1);
}

TEST_CASE("counts depend only on the 1-skeleton") {
  auto K1 = skeleton_of_simplex(4, 1);
  auto K2 = skeleton_of_simplex(4, 2);
  for (const auto& I : multidegrees_up_to(4, 3))
    CHECK(artin_count_by_multidegree(K1, I) == artin_count_by_multidegree(K2, I));
}

TEST_CASE("H_0 rank equals the monoid count (m <= 4, |I| <= 4)") {
  std::vector<SimplicialComplex> cases = {
      vertices_only(3), polygon(4),
      SimplicialComplex::from_facets(4, {face_of({1, 2}), face_of({3, 4})}),
      skeleton_of_simplex(4, 2)};
  for (const auto& K : cases) {
    for (const auto& I : multidegrees_up_to(K.vertex_count(), 4)) {
      if (I.total() == 0) continue;
      auto H = integer_homology(tk_complex(K, I));
      long long h0 = H.count(0) ? H.at(0).rank : 0;
      CAPTURE(I.to_string());
      CHECK(h0 == artin_count_by_multidegree(K, I));
    }
  }
}
