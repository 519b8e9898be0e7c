#include "loophom/homology.hpp"

#include <algorithm>
#include <variant>

namespace loophom {

std::map<int, HomologyGroup> integer_homology(const ChainComplex& cx) {
  if (!cx.boundary_squares_to_zero())
    throw std::logic_error("boundary does not square to zero");
  int lo = cx.min_degree();
  int hi = cx.truncation() ? *cx.truncation() - 1 : cx.max_degree();
  std::map<int, SmithResult> snf;
  std::map<int, HomologyGroup> out;
  for (int d = lo; d <= hi; ++d) {
    if (!snf.count(d)) snf[d] = smith_normal_form(cx.boundary(d));
    if (!snf.count(d + 1)) snf[d + 1] = smith_normal_form(cx.boundary(d + 1));
    HomologyGroup g;
    g.rank = cx.dim(d) - snf[d].rank - snf[d + 1].rank;
    g.torsion = snf[d + 1].invariant_factors;
    if (g.rank != 0 || !g.torsion.empty()) out[d] = std::move(g);
  }
  return out;
}

namespace {

template <class F>
std::map<int, long long> field_homology_impl(const F& f, const ChainComplex& cx) {
  int lo = cx.min_degree();
  int hi = cx.truncation() ? *cx.truncation() - 1 : cx.max_degree();
  std::map<int, long long> out;
  std::map<int, int> ranks;
  for (int d = lo; d <= hi; ++d) {
    if (!ranks.count(d)) ranks[d] = matrix_rank(f, cx.boundary(d));
    if (!ranks.count(d + 1)) ranks[d + 1] = matrix_rank(f, cx.boundary(d + 1));
    long long h = cx.dim(d) - ranks[d] - ranks[d + 1];
    if (h != 0) out[d] = h;
  }
  return out;
}

/// Per-degree reducer: one echelon holding the boundary image first and the
/// chosen homology representatives (augmented with their coordinates) after.
template <class F>
struct DegreeData {
  explicit DegreeData(const F& f) : echelon(f) {}
  Echelon<F> echelon;
  int boundary_rank = 0;
  long long hrank = 0;
  std::vector<SparseRow<F>> reps;  // cycle representatives (field vectors)
  std::vector<Chain> rep_chains;
};

template <class F>
struct HomologyImpl {
  HomologyImpl(const F& field, const ChainComplex& cx, int min_degree) : f(field) {
    int lo = std::max(cx.min_degree(), min_degree);
    int hi = cx.truncation() ? *cx.truncation() - 1 : cx.max_degree();
    valid_max = hi;
    // boundary ranks first; each echelon is then handed to the degree below
    std::map<int, Echelon<F>> bech;
    std::map<int, int> brank;
    for (int d = lo; d <= hi + 1; ++d) {
      Echelon<F> e(f);
      for (const auto& col : cx.boundary(d).columns)
        e.add_row(row_from_ints(f, col));
      brank[d] = e.rank();
      if (d > lo) bech.emplace(d, std::move(e));
    }
    for (int d = lo; d <= hi; ++d) {
      DegreeData<F> data(f);
      data.echelon = std::move(bech.at(d + 1));
      data.boundary_rank = brank.at(d + 1);
      data.hrank = cx.dim(d) - brank.at(d) - data.boundary_rank;
      if (data.hrank > 0) {
        // representatives: cycles in echelon order of the nullspace of d_d,
        // kept while they extend the boundary span
        auto cycles = nullspace(f, cx.boundary(d));
        for (auto& z : cycles) {
          if (static_cast<long long>(data.reps.size()) == data.hrank) break;
          SparseRow<F> aug{{static_cast<int>(data.reps.size()), f.one()}};
          SparseRow<F> copy = z;
          if (data.echelon.add_row(std::move(copy), &aug) >= 0)
            data.reps.push_back(std::move(z));
        }
        for (const auto& z : data.reps)
          data.rep_chains.push_back(lift_chain(cx, d, z));
      }
      degrees.emplace(d, std::move(data));
    }
  }

  static Chain lift_chain(const ChainComplex& cx, int d, const SparseRow<F>& z);

  std::vector<Rational> coordinates(const ChainComplex& cx, int d,
                                    const Chain& cycle) const {
    auto it = degrees.find(d);
    if (it == degrees.end()) {
      if (cycle.is_zero()) return {};
      throw std::out_of_range("degree outside the computed range");
    }
    Chain dz = differential(cx.coalgebra(), cycle);
    if (!dz.is_zero()) {
      // zero in the field is enough (mod-p cycles have integer boundaries
      // divisible by p)
      auto v = row_from_ints(f, cx.to_vector_sparse(d - 1, dz));
      if (!v.empty()) throw std::invalid_argument("chain is not a cycle");
    }
    SparseRow<F> v = row_from_ints(f, cx.to_vector_sparse(d, cycle));
    SparseRow<F> aug;
    it->second.echelon.reduce(v, &aug);
    if (!v.empty())
      throw std::invalid_argument("cycle class lies outside the homology span");
    std::vector<Rational> coords(it->second.reps.size(), Rational(0));
    for (const auto& [i, c] : aug) coords[i] = to_rational(f.neg(c));
    return coords;
  }

  static Rational to_rational(const typename F::Elem& e);

  const F f;
  std::map<int, DegreeData<F>> degrees;
  int valid_max = -1;
  std::vector<Chain> empty_;
};

template <>
Chain HomologyImpl<RationalField>::lift_chain(const ChainComplex& cx, int d,
                                              const SparseRow<RationalField>& z) {
  BigInt scale = 1;
  for (const auto& [i, v] : z) scale = lcm(scale, denominator(v));
  Chain out;
  const auto& words = cx.basis(d);
  for (const auto& [i, v] : z) {
    BigInt c = numerator(v) * (scale / denominator(v));
    out.add(words[i], c.convert_to<long long>());
  }
  return out;
}

template <>
Chain HomologyImpl<PrimeField>::lift_chain(const ChainComplex& cx, int d,
                                           const SparseRow<PrimeField>& z) {
  Chain out;
  const auto& words = cx.basis(d);
  for (const auto& [i, v] : z) out.add(words[i], v);
  return out;
}

template <>
Rational HomologyImpl<RationalField>::to_rational(const Rational& e) {
  return e;
}

template <>
Rational HomologyImpl<PrimeField>::to_rational(const long long& e) {
  return Rational(e);
}

}  // namespace

std::map<int, long long> field_homology(const ChainComplex& cx,
                                        long long characteristic) {
  if (characteristic == 0) return field_homology_impl(RationalField{}, cx);
  return field_homology_impl(PrimeField(characteristic), cx);
}

struct FieldHomology::Impl {
  std::variant<HomologyImpl<RationalField>, HomologyImpl<PrimeField>> v;

  template <class Fn>
  decltype(auto) visit(Fn&& fn) const {
    return std::visit(std::forward<Fn>(fn), v);
  }
};

FieldHomology::FieldHomology(const ChainComplex& cx, long long characteristic,
                             int min_degree)
    : cx_(&cx), char_(characteristic) {
  if (characteristic == 0)
    impl_ = std::make_unique<Impl>(
        Impl{.v = HomologyImpl<RationalField>(RationalField{}, cx, min_degree)});
  else
    impl_ = std::make_unique<Impl>(Impl{
        .v = HomologyImpl<PrimeField>(PrimeField(characteristic), cx, min_degree)});
}

FieldHomology::~FieldHomology() = default;
FieldHomology::FieldHomology(FieldHomology&&) noexcept = default;

int FieldHomology::valid_max_degree() const {
  return impl_->visit([](const auto& h) { return h.valid_max; });
}

long long FieldHomology::rank(int degree) const {
  return impl_->visit([&](const auto& h) -> long long {
    auto it = h.degrees.find(degree);
    return it == h.degrees.end() ? 0 : it->second.hrank;
  });
}

const std::vector<Chain>& FieldHomology::basis(int degree) const {
  return impl_->visit([&](const auto& h) -> const std::vector<Chain>& {
    auto it = h.degrees.find(degree);
    return it == h.degrees.end() ? h.empty_ : it->second.rep_chains;
  });
}

std::vector<Rational> FieldHomology::class_coordinates(int degree,
                                                       const Chain& cycle) const {
  return impl_->visit(
      [&](const auto& h) { return h.coordinates(*cx_, degree, cycle); });
}

bool FieldHomology::class_is_zero(int degree, const Chain& cycle) const {
  auto coords = class_coordinates(degree, cycle);
  return std::all_of(coords.begin(), coords.end(),
                     [](const Rational& r) { return r.is_zero(); });
}

InducedMap induced_map(const std::function<Chain(const Word&)>& f,
                       const FieldHomology& source, const FieldHomology& target,
                       int degree) {
  InducedMap out;
  long long cols = source.rank(degree);
  long long rows = target.rank(degree);
  out.matrix.assign(rows, std::vector<Rational>(cols, Rational(0)));
  for (long long c = 0; c < cols; ++c) {
    Chain img;
    for (const auto& [w, coeff] : source.basis(degree)[c].terms())
      img += f(w) * coeff;
    auto coords = target.class_coordinates(degree, img);
    for (long long r = 0; r < rows; ++r) out.matrix[r][c] = coords[r];
  }
  // rank over the target field
  if (target.characteristic() == 0) {
    RationalField F;
    Echelon<RationalField> ech(F);
    for (long long c = 0; c < cols; ++c) {
      SparseRow<RationalField> row;
      for (long long r = 0; r < rows; ++r)
        if (!out.matrix[r][c].is_zero()) row.emplace_back(r, out.matrix[r][c]);
      ech.add_row(std::move(row));
    }
    out.rank = ech.rank();
  } else {
    PrimeField F(target.characteristic());
    Echelon<PrimeField> ech(F);
    for (long long c = 0; c < cols; ++c) {
      SparseRow<PrimeField> row;
      for (long long r = 0; r < rows; ++r) {
        auto e = F.from_int(numerator(out.matrix[r][c]).convert_to<long long>());
        if (!F.is_zero(e)) row.emplace_back(r, e);
      }
      ech.add_row(std::move(row));
    }
    out.rank = ech.rank();
  }
  return out;
}

bool verify_chain_map(const std::function<Chain(const Word&)>& f,
                      const ChainComplex& source, const ChainComplex& target,
                      int degree) {
  for (const Word& w : source.basis(degree)) {
    Chain lhs = differential(target.coalgebra(), f(w));
    Chain rhs;
    Chain dw = differential(source.coalgebra(), w);
    for (const auto& [v, c] : dw.terms()) rhs += f(v) * c;
    rhs = rhs * -1;
    lhs += rhs;
    if (!lhs.is_zero()) return false;
  }
  return true;
}

}  // namespace loophom
