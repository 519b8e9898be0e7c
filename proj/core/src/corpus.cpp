#include "loophom/corpus.hpp"

namespace loophom {

const std::vector<NamedComplex>& builtin_corpus() {
  static const std::vector<NamedComplex> corpus = [] {
    std::vector<NamedComplex> c;
    c.push_back({"point", full_simplex(1)});
    c.push_back({"two-points", vertices_only(2)});
    c.push_back({"edge", full_simplex(2)});
    c.push_back({"three-points", vertices_only(3)});
    c.push_back({"triangle", full_simplex(3)});
    c.push_back({"triangle-boundary", polygon(3)});
    c.push_back({"path-3", SimplicialComplex::from_facets(
                               3, {face_of({1, 2}), face_of({2, 3})})});
    c.push_back({"skel1-simplex-4", skeleton_of_simplex(4, 1)});
    c.push_back({"tetrahedron-boundary", skeleton_of_simplex(4, 2)});
    c.push_back({"tetrahedron", full_simplex(4)});
    c.push_back({"square", polygon(4)});
    c.push_back({"four-points", vertices_only(4)});
    c.push_back({"path-4", SimplicialComplex::from_facets(
                               4, {face_of({1, 2}), face_of({2, 3}),
                                   face_of({3, 4})})});
    c.push_back({"two-edges", SimplicialComplex::from_facets(
                                  4, {face_of({1, 2}), face_of({3, 4})})});
    c.push_back({"edge-and-point", SimplicialComplex::from_facets(
                                       3, {face_of({1, 2}), face_of({3})})});
    c.push_back({"pentagon", polygon(5)});
    c.push_back({"skel1-simplex-5", skeleton_of_simplex(5, 1)});
    c.push_back({"five-points", vertices_only(5)});
    c.push_back({"cone-over-square",
                 SimplicialComplex::from_facets(
                     5, {face_of({1, 2, 5}), face_of({2, 3, 5}),
                         face_of({3, 4, 5}), face_of({1, 4, 5})})});
    c.push_back({"tetrahedron-minus-facet",
                 SimplicialComplex::from_facets(
                     4, {face_of({1, 2, 3}), face_of({1, 2, 4}),
                         face_of({1, 3, 4})})});
    return c;
  }();
  return corpus;
}

SimplicialComplex random_complex(std::mt19937& rng, int m) {
  std::uniform_int_distribution<int> facet_count(1, 2 * m);
  std::uniform_int_distribution<int> size_dist(1, std::min(m, 4));
  std::vector<Face> facets;
  int n = facet_count(rng);
  for (int i = 0; i < n; ++i) {
    int size = size_dist(rng);
    Face f = 0;
    std::uniform_int_distribution<int> vdist(0, m - 1);
    while (face_size(f) < size) f |= Face{1} << vdist(rng);
    facets.push_back(f);
  }
  Face covered = 0;
  for (Face f : facets) covered |= f;
  for (int v = 0; v < m; ++v)
    if (!(covered & (Face{1} << v))) facets.push_back(Face{1} << v);
  return SimplicialComplex::from_facets(m, facets);
}

}  // namespace loophom
