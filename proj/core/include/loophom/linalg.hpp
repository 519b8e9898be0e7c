#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <stdexcept>
#include <vector>

#include "loophom/sparse.hpp"

namespace loophom {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct RationalField {
  using Elem = Rational;
  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long v) const { return Elem(v); }
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a.is_zero()) throw std::domain_error("division by zero");
    return 1 / a;
  }
  long long characteristic() const { return 0; }
};

/// F_p for a prime p < 2^31; elements normalized to [0, p).
struct PrimeField {
  long long p;
  using Elem = long long;
  explicit PrimeField(long long prime) : p(prime) {
    if (p < 2) throw std::invalid_argument("characteristic must be a prime");
    for (long long d = 2; d * d <= p; ++d)
      if (p % d == 0) throw std::invalid_argument("characteristic must be a prime");
  }
  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(long long v) const {
    long long r = v % p;
    return r < 0 ? r + p : r;
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  Elem add(const Elem& a, const Elem& b) const { return (a + b) % p; }
  Elem sub(const Elem& a, const Elem& b) const { return ((a - b) % p + p) % p; }
  Elem mul(const Elem& a, const Elem& b) const { return (a * b) % p; }
  Elem neg(const Elem& a) const { return a == 0 ? 0 : p - a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    // extended Euclid
    long long t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
      long long q = r / newr;
      t = std::exchange(newt, t - q * newt);
      r = std::exchange(newr, r - q * newr);
    }
    return from_int(t);
  }
  long long characteristic() const { return p; }
};

/// Sparse vector over a field: (index, value) pairs sorted by index.
template <class F>
using SparseRow = std::vector<std::pair<int, typename F::Elem>>;

template <class F>
SparseRow<F> row_from_ints(const F& f,
                           const std::vector<std::pair<int, long long>>& v) {
  SparseRow<F> out;
  out.reserve(v.size());
  for (const auto& [i, c] : v) {
    auto e = f.from_int(c);
    if (!f.is_zero(e)) out.emplace_back(i, e);
  }
  return out;
}

/// r += c * s
template <class F>
void row_axpy(const F& f, SparseRow<F>& r, const typename F::Elem& c,
              const SparseRow<F>& s) {
  if (f.is_zero(c)) return;
  SparseRow<F> out;
  out.reserve(r.size() + s.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < s.size()) {
    if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || s[j].first < r[i].first) {
      auto v = f.mul(c, s[j].second);
      if (!f.is_zero(v)) out.emplace_back(s[j].first, v);
      ++j;
    } else {
      auto v = f.add(r[i].second, f.mul(c, s[j].second));
      if (!f.is_zero(v)) out.emplace_back(r[i].first, v);
      ++i;
      ++j;
    }
  }
  r = std::move(out);
}

/// Row-echelon accumulator with optional augmentation tracking. Rows are
/// normalized to leading coefficient 1. Reduction is by leading index only
/// (forward elimination), which keeps fill-in low on the matrices seen here.
template <class F>
class Echelon {
public:
  explicit Echelon(const F& f) : f_(f) {}

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::map<int, int>& pivots() const { return pivot_of_; }
  const SparseRow<F>& row(int slot) const { return rows_[slot]; }
  const SparseRow<F>& aug(int slot) const { return augs_[slot]; }

  /// Reduces r (and aug, if given) against the stored rows in place.
  void reduce(SparseRow<F>& r, SparseRow<F>* aug = nullptr) const {
    while (!r.empty()) {
      auto it = pivot_of_.find(r.front().first);
      if (it == pivot_of_.end()) return;
      auto c = f_.neg(r.front().second);
      row_axpy(f_, r, c, rows_[it->second]);
      if (aug) row_axpy(f_, *aug, c, augs_[it->second]);
    }
  }

  /// Reduces and, if nonzero, stores the row. Returns the pivot index or -1
  /// if the row reduced to zero (in which case `aug`, when given, holds the
  /// accumulated dependency).
  int add_row(SparseRow<F> r, SparseRow<F>* aug = nullptr) {
    reduce(r, aug);
    if (r.empty()) return -1;
    auto lead = f_.inv(r.front().second);
    for (auto& [i, v] : r) v = f_.mul(v, lead);
    SparseRow<F> a;
    if (aug) {
      for (auto& [i, v] : *aug) v = f_.mul(v, lead);
      a = *aug;
    }
    int pivot = r.front().first;
    pivot_of_[pivot] = static_cast<int>(rows_.size());
    rows_.push_back(std::move(r));
    augs_.push_back(std::move(a));
    return pivot;
  }

  /// True iff r lies in the row span.
  bool contains(SparseRow<F> r) const {
    reduce(r);
    return r.empty();
  }

private:
  F f_;  // by value: fields are small and the echelon must stay movable
  std::map<int, int> pivot_of_;
  std::vector<SparseRow<F>> rows_;
  std::vector<SparseRow<F>> augs_;
};

/// Rank of an integer matrix over the field.
template <class F>
int matrix_rank(const F& f, const SparseIntMat& M) {
  Echelon<F> ech(f);
  for (const auto& col : M.columns) ech.add_row(row_from_ints(f, col));
  return ech.rank();
}

/// Basis of { x : M x = 0 } over the field, in column-index coordinates.
/// Deterministic: columns are processed left to right.
template <class F>
std::vector<SparseRow<F>> nullspace(const F& f, const SparseIntMat& M) {
  Echelon<F> ech(f);
  std::vector<SparseRow<F>> out;
  for (int c = 0; c < M.cols; ++c) {
    SparseRow<F> row = row_from_ints(f, M.columns[c]);
    SparseRow<F> aug{{c, f.one()}};
    if (ech.add_row(std::move(row), &aug) < 0) out.push_back(std::move(aug));
  }
  return out;
}

}  // namespace loophom
