#pragma once

#include <map>
#include <string>
#include <vector>

namespace loophom {

/// Basis-and-products description of the reduced loop homology of one vertex
/// space: all basis degrees are >= 1, and pairwise products are expanded in
/// the basis. Products are only consulted for degree sums within the working
/// cutoff, so truncated tables are exact.
struct VertexAlgebra {
  struct BasisElem {
    std::string name;
    int degree = 0;
  };
  std::vector<BasisElem> basis;
  /// (left, right) -> expansion; missing or empty entries mean zero.
  std::map<std::pair<int, int>, std::vector<std::pair<int, long long>>> products;

  int min_degree() const;
  /// degrees >= 1, degree additivity of products, associativity on triples
  /// whose degree sums stay within the cutoff
  void validate(int cutoff) const;
};

/// One polynomial generator of the given degree, truncated: u, u^2, ... with
/// k * degree <= cutoff.
VertexAlgebra poly_vertex_algebra(int degree, int cutoff);

/// One exterior generator: u with u * u = 0.
VertexAlgebra exterior_vertex_algebra(int degree);

}  // namespace loophom
