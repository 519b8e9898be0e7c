#pragma once

#include <map>
#include <vector>

#include "loophom/multidegree.hpp"
#include "loophom/simplicial.hpp"

namespace loophom {

/// Symbolic description of a diagonal subspace arrangement complement:
/// ambient dimension, one coordinate block per diagonal subspace (the
/// coordinates forced equal), and optional strict chamber orderings among
/// same-color coordinates. Nothing is ever triangulated; homology flows
/// through the chain algebra.
struct ArrangementDescription {
  enum class Case { kUnitMultidegree, kSubcomplex, kChambers };
  Case which = Case::kUnitMultidegree;
  int ambient_dim = 0;
  std::vector<std::vector<int>> diagonal_blocks;  // 1-indexed coordinates
  struct ChamberOrder {
    int color;                     // 1-indexed
    std::vector<int> coordinates;  // strictly increasing along the order
  };
  std::vector<ChamberOrder> chambers;
};

/// The arrangement dictionary: the component of multidegree I is the
/// complement of the diagonal arrangement of K (unit multidegrees), of the
/// full subcomplex on the support (square-free multidegrees), or of the
/// substituted complex K(V[i_1], ..., V[i_m]) cut out by the chamber
/// inequalities t_j(1) < ... < t_j(i_j) (general multidegrees).
ArrangementDescription multidegree_to_arrangement(const SimplicialComplex& K,
                                                  const MultiDegree& I);

/// How the condition relating J_i to the following I-block treats an empty
/// I-block.
enum class NoEqualInterpretation {
  kVacuousWhenEmpty,   // empty I_{i+1} satisfies the condition
  kRequireNonempty,    // empty I_{i+1} fails it
  kInternalOnly,       // enforced (with nonemptiness) except for the last block
};

/// Which way the max-comparison between J_i and the following I-block runs.
/// The printed direction is max J_i < max I_{i+1}; calibration against
/// Smith-normal-form homology selects the reversed one.
enum class NoEqualDirection { kCalibrated, kAsPrinted };

/// Betti numbers of the no-s-equal manifold in R^m by direct enumeration of
/// the coding sequences (I_1, J_1, ..., J_k, I_{k+1}): pairwise disjoint
/// subsets of [m] with |J_i| = s and union [m], one basis element of degree
/// (s-2)k per admissible sequence.
std::map<int, long long> no_k_equal_betti_by_enumeration(
    int m, int s,
    NoEqualInterpretation interp = NoEqualInterpretation::kVacuousWhenEmpty,
    NoEqualDirection dir = NoEqualDirection::kCalibrated);

/// Per-degree comparison of the enumeration against the exact homology ranks
/// of the chain algebra of skel_{s-2} Delta[m] at (1, ..., 1).
struct NoEqualComparison {
  struct Row {
    int degree;
    long long enumerated;
    long long snf_rank;
    bool match;
  };
  std::vector<Row> rows;
  bool all_match = true;
};
NoEqualComparison no_k_equal_comparison(
    int m, int s,
    NoEqualInterpretation interp = NoEqualInterpretation::kVacuousWhenEmpty,
    NoEqualDirection dir = NoEqualDirection::kCalibrated);

/// Integer homology scan over all |I| <= bound asserting empty torsion.
/// Refuses complexes that are not shifted.
struct TorsionReport {
  struct Violation {
    MultiDegree I;
    int degree;
  };
  std::vector<Violation> violations;
  int multidegrees_scanned = 0;
  bool torsion_free() const { return violations.empty(); }
};
TorsionReport shifted_torsion_report(const SimplicialComplex& K, int bound);

}  // namespace loophom
