#include "loophom/series.hpp"

#include <stdexcept>

namespace loophom {

TruncatedSeries TruncatedSeries::one(int order) {
  std::vector<Rational> c(order + 1, Rational(0));
  c[0] = 1;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::monomial(int order, int power,
                                          const Rational& coeff) {
  std::vector<Rational> c(order + 1, Rational(0));
  if (power <= order) c[power] = coeff;
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::geometric(int order, int power) {
  std::vector<Rational> c(order + 1, Rational(0));
  for (int i = 0; i <= order; i += power) c[i] = 1;
  return TruncatedSeries(std::move(c));
}

static void check_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.order() != b.order())
    throw std::invalid_argument("truncation orders differ");
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  check_same_order(*this, o);
  std::vector<Rational> c(c_);
  for (int i = 0; i <= order(); ++i) c[i] += o.c_[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  check_same_order(*this, o);
  std::vector<Rational> c(c_);
  for (int i = 0; i <= order(); ++i) c[i] -= o.c_[i];
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  check_same_order(*this, o);
  std::vector<Rational> c(order() + 1, Rational(0));
  for (int i = 0; i <= order(); ++i) {
    if (c_[i].is_zero()) continue;
    for (int j = 0; i + j <= order(); ++j) c[i + j] += c_[i] * o.c_[j];
  }
  return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::inverse() const {
  if (c_.empty() || c_[0].is_zero())
    throw std::invalid_argument("series with zero constant term is not invertible");
  std::vector<Rational> inv(order() + 1, Rational(0));
  inv[0] = 1 / c_[0];
  for (int i = 1; i <= order(); ++i) {
    Rational s(0);
    for (int j = 1; j <= i; ++j) s += c_[j] * inv[i - j];
    inv[i] = -s / c_[0];
  }
  return TruncatedSeries(std::move(inv));
}

TruncatedSeries series_of_dims(const GradedDims& dims) {
  std::vector<Rational> c;
  c.reserve(dims.dims.size());
  for (long long d : dims.dims) c.emplace_back(d);
  return TruncatedSeries(std::move(c));
}

TruncatedSeries flag_loop_series(const SimplicialComplex& K,
                                 const std::vector<TruncatedSeries>& vertex_series,
                                 int order) {
  if (!is_flag(K)) throw std::invalid_argument("complex is not flag");
  int m = K.vertex_count();
  if (static_cast<int>(vertex_series.size()) != m)
    throw std::invalid_argument("one series per vertex required");
  std::vector<TruncatedSeries> factor;  // P_j^{-1} - 1
  for (const auto& s : vertex_series) {
    if (s.order() < order) throw std::invalid_argument("series order too small");
    if (s[0] != Rational(1))
      throw std::invalid_argument("vertex series must have constant term 1");
    factor.push_back(s.inverse() - TruncatedSeries::one(s.order()));
  }
  TruncatedSeries total = TruncatedSeries::one(order) - TruncatedSeries::one(order);
  for (Face sigma : K.faces()) {
    TruncatedSeries prod = TruncatedSeries::one(order);
    for (int v : face_vertices(sigma)) {
      TruncatedSeries f = factor[v - 1];
      // re-truncate to the requested order
      std::vector<Rational> c(f.coeffs().begin(), f.coeffs().begin() + order + 1);
      prod = prod * TruncatedSeries(std::move(c));
    }
    total = total + prod;
  }
  return total;
}

TruncatedSeries fatwedge_loop_series(int m, int s,
                                     const std::vector<TruncatedSeries>& vertex_series,
                                     int order, bool all_subsets) {
  if (m < 3 || s < 1) throw std::invalid_argument("need m >= 3 and s >= 1");
  if (static_cast<int>(vertex_series.size()) != m)
    throw std::invalid_argument("one series per vertex required");
  std::vector<TruncatedSeries> inv, factor;
  for (const auto& p : vertex_series) {
    if (p.order() < order) throw std::invalid_argument("series order too small");
    std::vector<Rational> c(p.coeffs().begin(), p.coeffs().begin() + order + 1);
    TruncatedSeries pi = TruncatedSeries(std::move(c)).inverse();
    inv.push_back(pi);
    factor.push_back(pi - TruncatedSeries::one(order));
  }
  TruncatedSeries main = TruncatedSeries::one(order);
  for (const auto& pi : inv) main = main * pi;

  TruncatedSeries corr = TruncatedSeries::one(order) - TruncatedSeries::one(order);
  Face top = (Face{1} << m) - 1;
  for (Face sigma = top;; sigma = (sigma - 1) & top) {
    int size = face_size(sigma);
    bool keep = all_subsets ? size >= s - 1 : size == s - 1;
    if (keep) {
      TruncatedSeries prod = TruncatedSeries::one(order);
      for (int v : face_vertices(sigma)) prod = prod * factor[v - 1];
      corr = corr + prod;
    }
    if (sigma == 0) break;
  }
  Rational sign((s - 1) % 2 == 0 ? 1 : -1);
  return main + TruncatedSeries::monomial(order, s - 1, sign) * corr;
}

FatWedgeReport fatwedge_discrepancy_report(int n, int order) {
  FatWedgeReport rep;
  rep.n = n;
  // vertex spaces are spheres: P_{loops}(t) = 1/(1 - t^n)
  std::vector<TruncatedSeries> vs(3, TruncatedSeries::geometric(order, n));
  rep.all_subsets = fatwedge_loop_series(3, 3, vs, order, true);
  rep.faces_only = fatwedge_loop_series(3, 3, vs, order, false);
  // free product of three polynomial algebras and one more generator of
  // degree 3n+1: inverse series (1 - t^n)^3 - t^{3n+1}
  TruncatedSeries one = TruncatedSeries::one(order);
  TruncatedSeries a = one - TruncatedSeries::monomial(order, n, Rational(1));
  rep.expected = a * a * a - TruncatedSeries::monomial(order, 3 * n + 1, Rational(1));
  rep.all_subsets_matches = rep.all_subsets == rep.expected;
  rep.faces_only_matches = rep.faces_only == rep.expected;
  return rep;
}

}  // namespace loophom
