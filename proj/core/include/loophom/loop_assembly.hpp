#pragma once

#include <memory>

#include "loophom/homology.hpp"
#include "loophom/presentations.hpp"
#include "loophom/vertex_algebra.hpp"

namespace loophom {

/// Assembles the loop homology of the K-power of the vertex spaces from the
/// per-multidegree homology of the chain algebra, the doubling operations,
/// and the vertex algebras: the direct sum over multidegrees of
/// H(component) tensor (vertex algebra factors) modulo the span of
///   mu_{j,k}(y) (x) (split tensor)  -  y (x) (merged tensor),
/// with y running over the homology bases. Both operators in the relation
/// have degree 0, so the Koszul rule contributes no sign; this is the unique
/// convention consistent under iterated merges of three factors.
class LoopAssembly {
public:
  LoopAssembly(const SimplicialComplex& K, std::vector<VertexAlgebra> inputs,
               long long characteristic, int cutoff);
  ~LoopAssembly();

  const GradedDims& dims() const { return dims_; }
  long long characteristic() const { return char_; }
  int cutoff() const { return cutoff_; }

  /// A class of the direct sum: component multidegree, homology degree and
  /// basis index, and one tensor factor per particle (slots ordered by color
  /// block, then position).
  struct ClassRef {
    MultiDegree I;
    int homology_degree = 0;
    int basis_index = 0;
    std::vector<int> tensor;
  };

  /// Sparse vector over the per-degree basis of the direct sum.
  using Vector = std::vector<std::pair<int, Rational>>;

  int total_degree(const ClassRef& c) const;
  Vector vector_of(const ClassRef& c) const;

  /// Product of two classes: concatenation product on representatives,
  /// block-wise tensor concatenation with Koszul signs, expansion in the
  /// target homology basis. Throws if the product leaves the cutoff window.
  Vector product(const ClassRef& a, const ClassRef& b) const;

  /// Remainder of v after reduction modulo the relation span of its degree;
  /// the remainder's support is a basis of the quotient.
  Vector reduce(int degree, Vector v) const;
  bool is_zero_in_quotient(int degree, Vector v) const;

  /// True iff no nonzero combination supported on the multidegree-I part
  /// lies in the relation span (the quotient map is injective there).
  bool injective_on_multidegree(const MultiDegree& I) const;

  struct Impl;

private:
  GradedDims dims_;
  long long char_;
  int cutoff_;
  std::unique_ptr<Impl> impl_;
};

GradedDims loop_homology_dims(const SimplicialComplex& K,
                              const std::vector<VertexAlgebra>& inputs,
                              long long characteristic, int cutoff);

/// Independent oracle for sphere vertex spaces: aggregates the field
/// homology of the cobar construction on the exterior face coalgebra with
/// per-vertex generator degrees n_j + 1 (sphere dimension), over all
/// multidegrees contributing below the cutoff.
GradedDims sphere_oracle_dims(const SimplicialComplex& K,
                              const std::vector<int>& loop_degrees,
                              long long characteristic, int cutoff);

}  // namespace loophom
