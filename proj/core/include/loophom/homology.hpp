#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>

#include "loophom/cobar.hpp"
#include "loophom/linalg.hpp"
#include "loophom/smith.hpp"

namespace loophom {

struct HomologyGroup {
  long long rank = 0;
  std::vector<BigInt> torsion;  // invariant factors > 1, divisibility order

  bool operator==(const HomologyGroup& o) const {
    return rank == o.rank && torsion == o.torsion;
  }
};

/// H_k = ker d_k / im d_{k+1} over Z, exact. Throws if d*d != 0. For a
/// truncated complex, degrees up to truncation - 1 are reported.
std::map<int, HomologyGroup> integer_homology(const ChainComplex& cx);

/// Per-degree dimensions over Q (characteristic 0) or F_p.
std::map<int, long long> field_homology(const ChainComplex& cx,
                                        long long characteristic);

/// (multidegree, topological degree) -> homology group.
struct BettiTable {
  std::map<std::pair<MultiDegree, int>, HomologyGroup> entries;
};

/// Homology of one complex over a fixed field: ranks, cycle representatives
/// whose classes form a basis, and coordinates of arbitrary cycle classes in
/// that basis. Representatives are taken in column-echelon order of the
/// cycle space, so the output is deterministic.
class FieldHomology {
public:
  /// Degrees below min_degree are not computed (useful when degree-0 classes
  /// are handled by component bookkeeping elsewhere).
  FieldHomology(const ChainComplex& cx, long long characteristic,
                int min_degree = 0);
  ~FieldHomology();
  FieldHomology(FieldHomology&&) noexcept;

  const ChainComplex& complex() const { return *cx_; }
  long long characteristic() const { return char_; }
  /// Largest degree with valid homology.
  int valid_max_degree() const;

  long long rank(int degree) const;
  /// Integer cycle representatives (F_p classes lifted; rational classes
  /// scaled to integers).
  const std::vector<Chain>& basis(int degree) const;

  /// Coordinates of the class of an integer cycle in basis(degree), as exact
  /// rationals (entries of F_p coordinates are lifted to [0, p)). Throws if
  /// the chain is not a cycle of that degree.
  std::vector<Rational> class_coordinates(int degree, const Chain& cycle) const;
  bool class_is_zero(int degree, const Chain& cycle) const;

  struct Impl;
  Impl& impl() const { return *impl_; }

private:
  const ChainComplex* cx_;
  long long char_;
  std::unique_ptr<Impl> impl_;
};

/// Matrix of the map induced on homology by a chain map given wordwise.
/// Columns are indexed by the source basis, rows by the target basis.
/// Asserts that the images of the representatives are cycles.
struct InducedMap {
  std::vector<std::vector<Rational>> matrix;  // rows x cols
  long long rank = 0;
};
InducedMap induced_map(const std::function<Chain(const Word&)>& f,
                       const FieldHomology& source, const FieldHomology& target,
                       int degree);

/// Exact check that f commutes with the differentials on the whole degree-d
/// slice of the source.
bool verify_chain_map(const std::function<Chain(const Word&)>& f,
                      const ChainComplex& source, const ChainComplex& target,
                      int degree);

}  // namespace loophom
