#include "loophom/coalgebra.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace loophom {

GradedCoalgebra::GradedCoalgebra(
    int colors, std::vector<Element> basis, int counit,
    std::vector<std::vector<CoproductTerm>> reduced_coproduct)
    : colors_(colors),
      basis_(std::move(basis)),
      counit_(counit),
      coproduct_(std::move(reduced_coproduct)) {
  if (coproduct_.size() != basis_.size())
    throw std::invalid_argument("coproduct table size mismatch");
  if (counit_ < 0 || counit_ >= dim() || basis_[counit_].degree != 0 ||
      !basis_[counit_].mdeg.is_zero())
    throw std::invalid_argument("counit must be the degree-0, multidegree-0 element");
  for (int i = 0; i < dim(); ++i) by_mdeg_.emplace(basis_[i].mdeg, i);
}

int GradedCoalgebra::index_of_mdeg(const MultiDegree& I) const {
  auto it = by_mdeg_.find(I);
  return it == by_mdeg_.end() ? -1 : it->second;
}

bool GradedCoalgebra::is_grading_additive() const {
  for (int i = 0; i < dim(); ++i) {
    for (const auto& t : coproduct_[i]) {
      if (basis_[t.left].degree + basis_[t.right].degree != basis_[i].degree)
        return false;
      if (basis_[t.left].mdeg + basis_[t.right].mdeg != basis_[i].mdeg)
        return false;
    }
  }
  return true;
}

bool GradedCoalgebra::is_coassociative() const {
  // expand both sides into (l, m, r) -> coefficient
  for (int i = 0; i < dim(); ++i) {
    std::map<std::tuple<int, int, int>, long long> lhs, rhs;
    for (const auto& t : coproduct_[i])
      for (const auto& u : coproduct_[t.left])
        lhs[{u.left, u.right, t.right}] += t.coeff * u.coeff;
    for (const auto& t : coproduct_[i])
      for (const auto& u : coproduct_[t.right])
        rhs[{t.left, u.left, u.right}] += t.coeff * u.coeff;
    auto prune = [](std::map<std::tuple<int, int, int>, long long>& m) {
      for (auto it = m.begin(); it != m.end();)
        it = it->second == 0 ? m.erase(it) : std::next(it);
    };
    prune(lhs);
    prune(rhs);
    if (lhs != rhs) return false;
  }
  return true;
}

long long koszul_kappa(Face a, Face b, const std::vector<int>& degrees) {
  long long total = 0;
  Face x = a;
  while (x) {
    int i = __builtin_ctzll(x);
    x &= x - 1;
    Face below = b & ((Face{1} << i) - 1);
    while (below) {
      int j = __builtin_ctzll(below);
      below &= below - 1;
      total += static_cast<long long>(degrees[i]) * degrees[j];
    }
  }
  return total;
}

GradedCoalgebra exterior_sr_coalgebra(const SimplicialComplex& K,
                                      const std::vector<int>& degrees) {
  int m = K.vertex_count();
  if (static_cast<int>(degrees.size()) != m)
    throw std::invalid_argument("need one degree per vertex");
  for (int d : degrees)
    if (d <= 0) throw std::invalid_argument("generator degrees must be positive");

  std::vector<GradedCoalgebra::Element> basis;
  std::vector<std::vector<GradedCoalgebra::CoproductTerm>> cop;
  std::map<Face, int> index;
  for (Face f : K.faces()) {
    GradedCoalgebra::Element e;
    e.mdeg = MultiDegree::characteristic(m, f);
    e.degree = 0;
    for (int v : face_vertices(f)) e.degree += degrees[v - 1];
    std::string label = "v{";
    auto vs = face_vertices(f);
    for (std::size_t i = 0; i < vs.size(); ++i)
      label += (i ? "," : "") + std::to_string(vs[i]);
    label += '}';
    e.label = label;
    index[f] = static_cast<int>(basis.size());
    basis.push_back(std::move(e));
  }
  for (Face f : K.faces()) {
    std::vector<GradedCoalgebra::CoproductTerm> terms;
    // ordered splits into two nonempty parts
    if (face_size(f) >= 2) {
      Face s1 = (f - 1) & f;
      for (; s1 != 0; s1 = (s1 - 1) & f) {
        Face s2 = f & ~s1;
        long long kappa = koszul_kappa(s1, s2, degrees);
        terms.push_back({index[s1], index[s2], (kappa & 1) ? -1LL : 1LL});
      }
    }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
      return std::tie(a.left, a.right) < std::tie(b.left, b.right);
    });
    cop.push_back(std::move(terms));
  }
  return GradedCoalgebra(m, std::move(basis), index[0], std::move(cop));
}

GradedCoalgebra exterior_sr_coalgebra(const SimplicialComplex& K) {
  return exterior_sr_coalgebra(K, std::vector<int>(K.vertex_count(), 1));
}

GradedCoalgebra tuple_coalgebra(const SimplicialComplex& K,
                                const MultiDegree& bound) {
  int m = K.vertex_count();
  if (bound.size() != m)
    throw std::invalid_argument("bound size must equal vertex count");

  // enumerate tuples 0 <= y <= bound with supp(y) in K, ordered by (|y|, lex)
  std::vector<MultiDegree> tuples;
  std::vector<int> cur(m, 0);
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == m) {
      MultiDegree y(cur);
      if (K.contains(y.support())) tuples.push_back(std::move(y));
      return;
    }
    for (int v = 0; v <= bound[pos]; ++v) {
      cur[pos] = v;
      self(self, pos + 1);
    }
    cur[pos] = 0;
  };
  rec(rec, 0);
  std::sort(tuples.begin(), tuples.end(), [](const auto& a, const auto& b) {
    int ta = a.total(), tb = b.total();
    return ta != tb ? ta < tb : a < b;
  });

  std::map<std::vector<int>, int> index;
  std::vector<GradedCoalgebra::Element> basis;
  for (const auto& y : tuples) {
    GradedCoalgebra::Element e;
    e.mdeg = y;
    e.degree = y.total();
    e.label = "x(" + y.to_string() + ")";
    index[y.entries()] = static_cast<int>(basis.size());
    basis.push_back(std::move(e));
  }

  std::vector<std::vector<GradedCoalgebra::CoproductTerm>> cop(basis.size());
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    const auto& y = tuples[i];
    if (y.total() < 2) continue;
    // ordered splits y = y1 + y2, both nonzero
    std::vector<int> part(m, 0);
    auto split = [&](auto&& self, int pos) -> void {
      if (pos == m) {
        MultiDegree y1(part), y2 = y - y1;
        if (y1.is_zero() || y2.is_zero()) return;
        // supports of y1, y2 are subsets of supp(y), hence faces of K
        long long eps = epsilon_tuples(y1, y2);
        cop[i].push_back({index.at(y1.entries()), index.at(y2.entries()),
                          (eps & 1) ? -1LL : 1LL});
        return;
      }
      for (int v = 0; v <= y[pos]; ++v) {
        part[pos] = v;
        self(self, pos + 1);
      }
      part[pos] = 0;
    };
    split(split, 0);
  }
  return GradedCoalgebra(m, std::move(basis), index.at(std::vector<int>(m, 0)),
                         std::move(cop));
}

}  // namespace loophom
