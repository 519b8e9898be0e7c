#pragma once

#include <vector>

#include "loophom/linalg.hpp"
#include "loophom/sparse.hpp"

namespace loophom {

struct SmithResult {
  long long rank = 0;
  /// Invariant factors greater than 1, in divisibility order.
  std::vector<BigInt> invariant_factors;
};

/// Smith normal form data of an integer matrix, computed exactly with
/// arbitrary-precision arithmetic. Pivots of absolute value 1 are eliminated
/// first (cheapest fill by a Markowitz-style cost); the residual is
/// diagonalized by gcd reduction and the diagonal is fixed up into
/// divisibility order.
SmithResult smith_normal_form(const SparseIntMat& M);

}  // namespace loophom
