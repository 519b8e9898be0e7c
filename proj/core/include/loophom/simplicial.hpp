#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "loophom/multidegree.hpp"

namespace loophom {

/// Abstract simplicial complex on the vertex set [m], stored as the full
/// downward-closed face family (including the empty face). Every vertex of
/// [m] must lie in some facet; construction rejects uncovered vertices.
/// Immutable after construction.
class SimplicialComplex {
public:
  static SimplicialComplex from_facets(int m, const std::vector<Face>& facets);
  static SimplicialComplex from_faces(int m, std::vector<Face> faces);

  int vertex_count() const { return m_; }
  /// All faces including the empty face, sorted by (size, value).
  const std::vector<Face>& faces() const { return faces_; }
  /// Nonempty faces, in the same order.
  std::span<const Face> nonempty_faces() const {
    return std::span<const Face>(faces_).subspan(1);
  }
  bool contains(Face f) const;
  /// Maximal faces.
  std::vector<Face> facets() const;
  int face_count() const { return static_cast<int>(faces_.size()); }
  /// dim K = max |sigma| - 1; the empty complex on 0 vertices has dim -1.
  int dim() const;

  bool operator==(const SimplicialComplex& o) const {
    return m_ == o.m_ && faces_ == o.faces_;
  }

private:
  SimplicialComplex(int m, std::vector<Face> faces);
  int m_ = 0;
  std::vector<Face> faces_;  // sorted by (popcount, value); faces_[0] == 0
};

/// Minimal non-faces: tau not in K with every proper subset in K.
std::vector<Face> missing_faces(const SimplicialComplex& K);

/// True iff every missing face has exactly 2 elements.
bool is_flag(const SimplicialComplex& K);

/// Shifted with respect to the given vertex order 1 < ... < m:
/// sigma in K, j in sigma, i < j  implies  (sigma - {j}) + {i} in K.
bool is_shifted_in_given_order(const SimplicialComplex& K);

/// Searches all vertex orderings for m <= 10 (early exit on the identity
/// order); falls back to the given-order check for larger m.
bool is_shifted(const SimplicialComplex& K);

/// Substitution K(L_1, ..., L_s): on the disjoint union of the vertex sets,
/// a set is a face iff its block support is a face of K and each block
/// restriction is a face of the corresponding L_i.
SimplicialComplex compose(const SimplicialComplex& K,
                          const std::vector<SimplicialComplex>& blocks);

SimplicialComplex full_simplex(int m);
SimplicialComplex vertices_only(int m);
/// All faces of K with at most i+1 vertices.
SimplicialComplex skeleton(const SimplicialComplex& K, int i);
SimplicialComplex skeleton_of_simplex(int m, int i);
/// K restricted to V, reindexed onto [|V|] preserving vertex order.
SimplicialComplex full_subcomplex(const SimplicialComplex& K, Face V);
/// Complex on [m+1] whose missing faces are tau + {m+1} over missing faces
/// tau of K.  Equals Delta[m] united with the cone over K.
SimplicialComplex sigma_suspension(const SimplicialComplex& K);
/// Clique complex of the 1-skeleton.
SimplicialComplex flagification(const SimplicialComplex& K);

/// Boundary of the m-gon on vertices 1..m (m >= 3).
SimplicialComplex polygon(int m);
/// Boundary of the n-dimensional octahedron (join of n copies of V[2];
/// vertex i is antipodal to vertex n+i).
SimplicialComplex octahedron(int n);

}  // namespace loophom
