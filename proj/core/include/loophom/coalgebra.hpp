#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "loophom/simplicial.hpp"

namespace loophom {

/// Finite graded coalgebra with an N^m multigrading, given by an explicit
/// basis and a fully expanded reduced-coproduct table. The counit element is
/// the unique basis element of degree 0 and multidegree 0.
class GradedCoalgebra {
public:
  struct Element {
    std::string label;
    int degree = 0;
    MultiDegree mdeg;
  };
  struct CoproductTerm {
    int left;
    int right;
    long long coeff;
  };

  GradedCoalgebra(int colors, std::vector<Element> basis, int counit,
                  std::vector<std::vector<CoproductTerm>> reduced_coproduct);

  int colors() const { return colors_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const Element& element(int i) const { return basis_[i]; }
  int counit_index() const { return counit_; }
  const std::vector<CoproductTerm>& reduced_coproduct(int i) const {
    return coproduct_[i];
  }
  /// Basis index of the element with the given multidegree, or -1.
  /// Well-defined for the complexes built here, where multidegrees are
  /// distinct across the basis.
  int index_of_mdeg(const MultiDegree& I) const;

  /// (Delta x id) o Delta == (id x Delta) o Delta on every basis element,
  /// by direct expansion of the reduced coproduct.
  bool is_coassociative() const;
  /// Left + right multidegrees (and degrees) of every coproduct term equal
  /// the parent's.
  bool is_grading_additive() const;

private:
  int colors_;
  std::vector<Element> basis_;
  int counit_;
  std::vector<std::vector<CoproductTerm>> coproduct_;
  std::unordered_map<MultiDegree, int, MultiDegreeHash> by_mdeg_;
};

/// kappa(a, b) = sum over i in a, j in b, i > j of d_i * d_j. Equals
/// epsilon_sign(a, b) when all d_i = 1.
long long koszul_kappa(Face a, Face b, const std::vector<int>& degrees);

/// Dual of the exterior face algebra of K, with one basis element v_sigma per
/// face. deg v_sigma = sum of the per-vertex degrees over sigma; the
/// multidegree is the characteristic vector of sigma. The reduced-coproduct
/// coefficient of the ordered split (s1, s2) is (-1)^kappa(s1, s2), which is
/// (-1)^epsilon(s1, s2) for unit degrees.
GradedCoalgebra exterior_sr_coalgebra(const SimplicialComplex& K,
                                      const std::vector<int>& degrees);
GradedCoalgebra exterior_sr_coalgebra(const SimplicialComplex& K);

/// Coalgebra on the nonzero tuples y with supp(y) in K and y <= bound
/// componentwise. deg y = |y|, multidegree y; the split (y1, y2) with
/// y1 + y2 = y carries the coefficient (-1)^epsilon(y1, y2) with epsilon
/// counted with multiplicities.
GradedCoalgebra tuple_coalgebra(const SimplicialComplex& K,
                                const MultiDegree& bound);

}  // namespace loophom
