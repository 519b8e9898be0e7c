#pragma once

#include <utility>
#include <vector>

namespace loophom {

/// Column-major sparse integer matrix. Each column holds (row, value) pairs
/// sorted by row, zero values omitted.
struct SparseIntMat {
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::pair<int, long long>>> columns;

  static SparseIntMat zero(int rows, int cols) {
    SparseIntMat M;
    M.rows = rows;
    M.cols = cols;
    M.columns.resize(cols);
    return M;
  }
};

}  // namespace loophom
