#pragma once

#include <map>
#include <string>
#include <vector>

#include "loophom/multidegree.hpp"
#include "loophom/simplicial.hpp"

namespace loophom {

/// Finite-dimensional multigraded algebra with a fixed basis and a fully
/// expanded multiplication table (basis x basis -> signed basis element or
/// zero).
class FiniteGradedAlgebra {
public:
  struct Element {
    std::string label;
    int degree = 0;
    MultiDegree mdeg;
  };

  FiniteGradedAlgebra(std::vector<Element> basis, int unit,
                      std::vector<std::vector<std::pair<int, long long>>> table);

  int dim() const { return static_cast<int>(basis_.size()); }
  const Element& element(int i) const { return basis_[i]; }
  int unit_index() const { return unit_; }
  /// (target index, coefficient); (-1, 0) encodes the zero product.
  std::pair<int, long long> product(int a, int b) const {
    return table_[a * dim() + b];
  }

  bool is_associative() const;     // exhaustive on basis triples
  bool is_unital() const;
  bool is_multidegree_additive() const;  // on nonzero products

private:
  std::vector<Element> basis_;
  int unit_;
  std::vector<std::pair<int, long long>> table_;
};

/// Exterior face algebra of K: one basis element v_sigma per face,
/// v_sigma * v_tau = (-1)^epsilon(sigma, tau) v_{sigma + tau} when the faces
/// are disjoint with union in K, zero otherwise.
FiniteGradedAlgebra exterior_sr_algebra(const SimplicialComplex& K);

/// Multigraded Betti numbers dim Tor^A_{n,I}(k, k) for |I| <= bound,
/// computed by iteratively resolving kernels with minimal multigraded
/// generator sets. The algebra must be connected (unique basis element in
/// multidegree zero, the unit).
std::map<std::pair<int, MultiDegree>, long long> minimal_resolution_betti(
    const FiniteGradedAlgebra& A, long long characteristic, int bound);

/// Dimension comparison of the two computations of the same numbers: the
/// resolution side dim Tor^{wedge(K)}_{n,I} against the chain-algebra side
/// dim H_{|I|-n, I}, over the same field. Never touches the cobar code path
/// on the resolution side.
struct CotorReport {
  struct Row {
    int n;
    MultiDegree I;
    long long dim_tor;
    long long dim_cobar;
    bool match;
  };
  std::vector<Row> rows;
  bool all_match = true;
};
CotorReport verify_cotor_iso(const SimplicialComplex& K, long long characteristic,
                             int bound);

}  // namespace loophom
