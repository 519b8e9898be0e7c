#pragma once

#include <string>
#include <vector>

#include "loophom/corpus.hpp"

namespace loophom {

struct VerifyOptions {
  unsigned seed = 1;
  /// Test hook: corrupt one boundary entry before the d*d check, which must
  /// then report a failure.
  bool corrupt_hook = false;
  /// Complexes to verify; empty means an empty report.
  std::vector<NamedComplex> complexes;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Runs the whole cross-check battery: boundary squares to zero, the
/// resolution/chain-algebra dimension comparison, flag collapse with
/// component counts, the monoid/H_0 correspondence, commutation of the
/// doubling operations with the differential, surjectivity of the
/// square-free inclusion on homology, and the shifted torsion scan.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace loophom
