#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "loophom/multidegree.hpp"
#include "loophom/simplicial.hpp"

namespace loophom {

/// Map degree -> dimension, complete through the cutoff.
struct GradedDims {
  std::vector<long long> dims;  // index = degree, size = cutoff + 1
  int cutoff() const { return static_cast<int>(dims.size()) - 1; }
  long long at(int d) const {
    return d >= 0 && d < static_cast<int>(dims.size()) ? dims[d] : 0;
  }
  bool operator==(const GradedDims& o) const { return dims == o.dims; }
};

/// Free graded algebra presentation: generators with degrees (optionally
/// multidegrees) and homogeneous noncommutative polynomial relations.
struct AlgebraPresentation {
  struct Generator {
    std::string name;
    int degree = 0;
    std::optional<MultiDegree> mdeg;
  };
  /// coefficient * product of generators (by index)
  using Term = std::pair<std::vector<int>, long long>;
  using Relation = std::vector<Term>;

  std::vector<Generator> generators;
  std::vector<Relation> relations;

  /// Throws unless generator names are unique and every relation is
  /// homogeneous in degree (and in multidegree where present).
  void validate() const;
};

/// Degreewise dimensions of the quotient of the free algebra by the
/// two-sided ideal of the relations, exact over Q or F_p. The ideal's
/// degree-d slice is spanned by all padded products u * r * v. Requires all
/// generator degrees >= 1; degree-0 generators need the multidegree-windowed
/// variant and are rejected here.
GradedDims quotient_dims(const AlgebraPresentation& P, long long characteristic,
                         int cutoff);

/// Multidegree-windowed variant: every generator must carry a nonzero
/// multidegree. Returns dimensions per (multidegree, degree) over the window
/// |I| <= bound; exact within the window since the ideal is multigraded.
std::map<std::pair<MultiDegree, int>, long long> quotient_dims_windowed(
    const AlgebraPresentation& P, long long characteristic, int bound);

/// Graph product: disjoint union of the vertex presentations plus graded
/// commutators a*b - (-1)^{deg a deg b} b*a across every edge of the flag
/// complex K. Generators of vertex i are tagged with multidegree e_i.
AlgebraPresentation flag_presentation(const SimplicialComplex& K,
                                      const std::vector<AlgebraPresentation>& vertex);

/// Which way the degree-0 generators brace the higher generator inside the
/// skeleton relation sum: x*w - w*x (calibrated) or x*w + w*x.
enum class BracketOrientation { kCommutator, kAntiCommutator };

/// Presentation of the homology algebra of the chain algebra of
/// skel_{s-2} Delta[m]: m degree-0 generators x_j (multidegree e_j),
/// C(m, s) generators w_J of degree s-2 (multidegree chi(J)), relations
/// x_i x_j = x_j x_i and, for every S with |S| = s+1,
///   sum_{j in S} (-1)^{eps(j, S)} [x_j, w_{S - {j}}] = 0,
/// with eps(j, S) = #{i in S : i < j}. The two readings of eps(j, S) differ
/// by a global sign of the relation and generate the same ideal. The bracket
/// defaults to the plain commutator, which is what the kernel of the
/// evaluation map onto homology pins down (the doubling operation, by
/// contrast, produces the anti-commutator on this side of the regrading).
AlgebraPresentation skeleton_tk_presentation(
    int m, int s, BracketOrientation bracket = BracketOrientation::kCommutator);

/// Loop homology presentation of the K-power of infinite complex projective
/// space for K = skel_{s-2} Delta[m]: generators u_j (degree 1) and w_J
/// (degree 2s-2, |J| = s); relations [u_i, u_j] = 0 for all i, j (including
/// i = j), [u_j, w_J] = 0 for j in J, and sum_{j in S} [u_j, w_{S-{j}}] = 0
/// for |S| = s+1, all with the graded commutator.
AlgebraPresentation dj_presentation(int m, int s);

/// Presentations of the reduced loop homology of a sphere / of infinite
/// complex projective space, as vertex inputs for flag_presentation.
AlgebraPresentation poly_presentation(int degree);      // one free generator
AlgebraPresentation exterior_presentation(int degree);  // one generator, square zero

}  // namespace loophom
