#include "loophom/smith.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace loophom {

namespace {

struct Workspace {
  // row -> (col -> value), and col -> set of rows with a nonzero entry
  std::vector<std::map<int, BigInt>> row_data;
  std::vector<std::set<int>> col_rows;

  explicit Workspace(const SparseIntMat& M)
      : row_data(M.rows), col_rows(M.cols) {
    for (int c = 0; c < M.cols; ++c)
      for (const auto& [r, v] : M.columns[c])
        if (v != 0) {
          row_data[r][c] = v;
          col_rows[c].insert(r);
        }
  }

  void set(int r, int c, BigInt v) {
    if (v == 0) {
      row_data[r].erase(c);
      col_rows[c].erase(r);
    } else {
      row_data[r][c] = std::move(v);
      col_rows[c].insert(r);
    }
  }

  const BigInt* get(int r, int c) const {
    auto it = row_data[r].find(c);
    return it == row_data[r].end() ? nullptr : &it->second;
  }

  // row[r2] -= q * row[r]
  void row_op(int r2, int r, const BigInt& q) {
    if (q == 0) return;
    for (const auto& [c, v] : row_data[r]) {
      BigInt nv = (get(r2, c) ? *get(r2, c) : BigInt(0)) - q * v;
      set(r2, c, std::move(nv));
    }
  }

  // col[c2] -= q * col[c]
  void col_op(int c2, int c, const BigInt& q) {
    if (q == 0) return;
    auto rows = col_rows[c];  // copy; col c itself is not modified
    for (int r : rows) {
      const BigInt& v = *get(r, c);
      BigInt nv = (get(r, c2) ? *get(r, c2) : BigInt(0)) - q * v;
      set(r, c2, std::move(nv));
    }
  }
};

long long markowitz(const Workspace& ws, int r, int c) {
  return static_cast<long long>(ws.row_data[r].size() - 1) *
         static_cast<long long>(ws.col_rows[c].size() - 1);
}

// Clears column c against the pivot at (r, c), swapping the pivot row when a
// remainder smaller than the pivot appears, until (r, c) is the only nonzero
// entry of the column. Returns the final pivot row.
int clear_column_gcd(Workspace& ws, int r, int c) {
  while (true) {
    BigInt pivot = *ws.get(r, c);
    bool again = false;
    auto rows = ws.col_rows[c];
    for (int r2 : rows) {
      if (r2 == r) continue;
      BigInt v = *ws.get(r2, c);
      BigInt q = v / pivot;
      ws.row_op(r2, r, q);
      const BigInt* rem = ws.get(r2, c);
      if (rem && *rem != 0) {
        r = r2;  // remainder is strictly smaller; continue Euclid there
        again = true;
        break;
      }
    }
    if (!again) return r;
  }
}

void clear_row_gcd(Workspace& ws, int& r, int& c) {
  while (true) {
    BigInt pivot = *ws.get(r, c);
    bool again = false;
    auto cols = ws.row_data[r];
    for (const auto& [c2, v0] : cols) {
      if (c2 == c) continue;
      BigInt v = v0;
      BigInt q = v / pivot;
      ws.col_op(c2, c, q);
      const BigInt* rem = ws.get(r, c2);
      if (rem && *rem != 0) {
        c = c2;
        again = true;
        break;
      }
    }
    if (!again) return;
  }
}

}  // namespace

SmithResult smith_normal_form(const SparseIntMat& M) {
  Workspace ws(M);
  std::vector<BigInt> diagonal;

  // Unit-pivot phase: lazy priority queue of (cost, row, col).
  using Cand = std::tuple<long long, int, int>;
  std::set<Cand> queue;
  for (int r = 0; r < M.rows; ++r)
    for (const auto& [c, v] : ws.row_data[r])
      if (v == 1 || v == -1) queue.insert({markowitz(ws, r, c), r, c});

  while (!queue.empty()) {
    auto [cost, r, c] = *queue.begin();
    queue.erase(queue.begin());
    const BigInt* v = ws.get(r, c);
    if (!v || (*v != 1 && *v != -1)) continue;
    if (markowitz(ws, r, c) != cost) {
      queue.insert({markowitz(ws, r, c), r, c});
      continue;
    }
    // eliminate column then row; unit pivot leaves no remainders
    BigInt pivot = *v;
    auto rows = ws.col_rows[c];
    for (int r2 : rows) {
      if (r2 == r) continue;
      BigInt q = *ws.get(r2, c) / pivot;
      ws.row_op(r2, r, q);
      for (const auto& [c2, v2] : ws.row_data[r2])
        if (v2 == 1 || v2 == -1) queue.insert({markowitz(ws, r2, c2), r2, c2});
    }
    auto cols = ws.row_data[r];
    for (const auto& [c2, v2] : cols) {
      if (c2 == c) continue;
      ws.col_op(c2, c, v2 / pivot);
      for (int r2 : ws.col_rows[c2]) {
        const BigInt* w = ws.get(r2, c2);
        if (w && (*w == 1 || *w == -1))
          queue.insert({markowitz(ws, r2, c2), r2, c2});
      }
    }
    ws.set(r, c, BigInt(0));
    diagonal.push_back(BigInt(1));
  }

  // General phase on whatever is left: smallest-entry pivoting.
  while (true) {
    int br = -1, bc = -1;
    BigInt best;
    for (int r = 0; r < M.rows; ++r) {
      for (const auto& [c, v] : ws.row_data[r]) {
        BigInt a = abs(v);
        if (br < 0 || a < best ||
            (a == best && markowitz(ws, r, c) < markowitz(ws, br, bc))) {
          best = a;
          br = r;
          bc = c;
        }
      }
    }
    if (br < 0) break;
    int r = br, c = bc;
    // row clearing can repopulate the column via remainders; iterate
    do {
      r = clear_column_gcd(ws, r, c);
      clear_row_gcd(ws, r, c);
    } while (ws.col_rows[c].size() > 1 || ws.row_data[r].size() > 1);
    diagonal.push_back(abs(*ws.get(r, c)));
    ws.set(r, c, BigInt(0));
  }

  // Fix up divisibility pairwise: diag(a, b) ~ diag(gcd, lcm).
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < diagonal.size(); ++i) {
      for (std::size_t j = i + 1; j < diagonal.size(); ++j) {
        if (diagonal[j] % diagonal[i] != 0) {
          BigInt g = gcd(diagonal[i], diagonal[j]);
          BigInt l = diagonal[i] / g * diagonal[j];
          diagonal[i] = g;
          diagonal[j] = l;
          changed = true;
        }
      }
    }
  }
  std::sort(diagonal.begin(), diagonal.end());

  SmithResult out;
  out.rank = static_cast<long long>(diagonal.size());
  for (auto& d : diagonal)
    if (d > 1) out.invariant_factors.push_back(d);
  return out;
}

}  // namespace loophom
