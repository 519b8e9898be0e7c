#include "loophom/vertex_algebra.hpp"

#include <limits>
#include <map>
#include <stdexcept>

namespace loophom {

int VertexAlgebra::min_degree() const {
  int d = std::numeric_limits<int>::max();
  for (const auto& b : basis) d = std::min(d, b.degree);
  return d;
}

void VertexAlgebra::validate(int cutoff) const {
  for (const auto& b : basis)
    if (b.degree < 1)
      throw std::invalid_argument(
          "reduced basis element of degree < 1 (vertex space not 1-connected)");
  auto expand = [&](int a, int b) {
    auto it = products.find({a, b});
    return it == products.end()
               ? std::vector<std::pair<int, long long>>{}
               : it->second;
  };
  for (const auto& [key, terms] : products) {
    auto [a, b] = key;
    int d = basis.at(a).degree + basis.at(b).degree;
    for (const auto& [c, coeff] : terms)
      if (basis.at(c).degree != d)
        throw std::invalid_argument("product is not degree-additive");
  }
  // associativity where all intermediate degrees stay within the cutoff
  int n = static_cast<int>(basis.size());
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (basis[a].degree + basis[b].degree + basis[c].degree > cutoff) continue;
        std::map<int, long long> lhs, rhs;
        for (const auto& [ab, cab] : expand(a, b))
          for (const auto& [t, ct] : expand(ab, c)) lhs[t] += cab * ct;
        for (const auto& [bc, cbc] : expand(b, c))
          for (const auto& [t, ct] : expand(a, bc)) rhs[t] += cbc * ct;
        for (auto* mp : {&lhs, &rhs})
          for (auto it = mp->begin(); it != mp->end();)
            it = it->second == 0 ? mp->erase(it) : std::next(it);
        if (lhs != rhs) throw std::invalid_argument("product is not associative");
      }
    }
  }
}

VertexAlgebra poly_vertex_algebra(int degree, int cutoff) {
  if (degree < 1) throw std::invalid_argument("generator degree must be >= 1");
  VertexAlgebra A;
  int top = cutoff / degree;
  for (int k = 1; k <= top; ++k)
    A.basis.push_back({"u^" + std::to_string(k), k * degree});
  for (int a = 1; a <= top; ++a)
    for (int b = 1; a + b <= top; ++b)
      A.products[{a - 1, b - 1}] = {{a + b - 1, 1}};
  return A;
}

VertexAlgebra exterior_vertex_algebra(int degree) {
  if (degree < 1) throw std::invalid_argument("generator degree must be >= 1");
  VertexAlgebra A;
  A.basis.push_back({"u", degree});
  A.products[{0, 0}] = {};
  return A;
}

}  // namespace loophom
