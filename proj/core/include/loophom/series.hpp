#pragma once

#include <vector>

#include "loophom/linalg.hpp"
#include "loophom/presentations.hpp"
#include "loophom/simplicial.hpp"

namespace loophom {

/// Power series with exact rational coefficients, truncated at order D.
/// All arithmetic is exact through the truncation order.
class TruncatedSeries {
public:
  TruncatedSeries() = default;
  TruncatedSeries(std::vector<Rational> coeffs)
      : c_(std::move(coeffs)) {}
  static TruncatedSeries one(int order);
  static TruncatedSeries monomial(int order, int power, const Rational& coeff);
  static TruncatedSeries geometric(int order, int power);  // 1/(1 - t^power)

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& operator[](int i) const { return c_[i]; }
  const std::vector<Rational>& coeffs() const { return c_; }

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  /// Multiplicative inverse; requires a nonzero constant term.
  TruncatedSeries inverse() const;
  bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

private:
  std::vector<Rational> c_;  // c_[i] is the t^i coefficient
};

TruncatedSeries series_of_dims(const GradedDims& dims);

/// The inverse Poincare series of the loop space of the K-power for flag K:
///   sum over faces sigma of K of prod_{j in sigma} (P_j^{-1}(t) - 1),
/// where P_j is the vertex loop-space series (constant term 1). The empty
/// face contributes 1.
TruncatedSeries flag_loop_series(const SimplicialComplex& K,
                                 const std::vector<TruncatedSeries>& vertex_series,
                                 int order);

/// The generalized fat wedge series formula, evaluated as printed:
///   prod_i P_i^{-1} + (-t)^{s-1} sum_{sigma : |sigma| >= s-1}
///     prod_{i in sigma} (P_i^{-1} - 1),
/// with sigma over all subsets of [m], or (alternative reading) over the
/// faces of skel_{s-2} Delta[m], which restricts to |sigma| = s-1.
TruncatedSeries fatwedge_loop_series(int m, int s,
                                     const std::vector<TruncatedSeries>& vertex_series,
                                     int order, bool all_subsets = true);

/// Informational comparison of the printed fat wedge formula against the
/// free-product answer for three spheres (m = s = 3): the inverse series
/// (1 - t^n)^3 - t^{3n+1}. Emits per-reading mismatch flags; does not gate.
struct FatWedgeReport {
  int n = 1;
  TruncatedSeries expected;       // free-product inverse series
  TruncatedSeries all_subsets;    // printed formula, sigma over all subsets
  TruncatedSeries faces_only;     // printed formula, |sigma| = s-1 reading
  bool all_subsets_matches = false;
  bool faces_only_matches = false;
};
FatWedgeReport fatwedge_discrepancy_report(int n, int order);

}  // namespace loophom
