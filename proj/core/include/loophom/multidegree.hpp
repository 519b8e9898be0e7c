#pragma once

#include <cstdint>
#include <functional>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

namespace loophom {

/// Bitset over the vertex set [m], m <= 64. Bit i-1 encodes vertex i.
using Face = std::uint64_t;

inline int face_size(Face f) { return __builtin_popcountll(f); }

inline Face face_of(std::initializer_list<int> verts) {
  Face f = 0;
  for (int v : verts) f |= Face{1} << (v - 1);
  return f;
}

/// Vertices of a face in increasing order (1-indexed).
std::vector<int> face_vertices(Face f);

/// Number of pairs (i, j) with i in a, j in b and i > j.
/// The arguments need not be disjoint; all pairs are counted.
int epsilon_sign(Face a, Face b);

/// A tuple I = (i_1, ..., i_m) of non-negative integers.
class MultiDegree {
public:
  MultiDegree() = default;
  explicit MultiDegree(std::vector<int> entries) : e_(std::move(entries)) {}
  static MultiDegree zero(int m) { return MultiDegree(std::vector<int>(m, 0)); }
  static MultiDegree unit(int m, int j);
  /// Characteristic vector of a face.
  static MultiDegree characteristic(int m, Face f);

  int size() const { return static_cast<int>(e_.size()); }
  int operator[](int j) const { return e_[j]; }
  int& operator[](int j) { return e_[j]; }
  const std::vector<int>& entries() const { return e_; }

  int total() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  Face support() const;
  bool is_zero() const;
  /// True iff every entry is 0 or 1.
  bool is_squarefree() const;
  /// Componentwise <=.
  bool leq(const MultiDegree& o) const;

  MultiDegree operator+(const MultiDegree& o) const;
  MultiDegree operator-(const MultiDegree& o) const;
  bool operator==(const MultiDegree& o) const { return e_ == o.e_; }
  bool operator!=(const MultiDegree& o) const { return e_ != o.e_; }
  bool operator<(const MultiDegree& o) const { return e_ < o.e_; }

  std::string to_string() const;  // comma-joined entries

private:
  std::vector<int> e_;
};

std::ostream& operator<<(std::ostream& os, const MultiDegree& I);

/// Pair count for tuples: sum over i > j of a[i] * b[j] (1-indexed colors).
long long epsilon_tuples(const MultiDegree& a, const MultiDegree& b);

/// All multidegrees on m colors with |I| == total.
std::vector<MultiDegree> multidegrees_of_total(int m, int total);

/// All multidegrees with |I| <= bound, ordered by (|I|, lex).
std::vector<MultiDegree> multidegrees_up_to(int m, int bound);

struct MultiDegreeHash {
  std::size_t operator()(const MultiDegree& I) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : I.entries()) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace loophom
