#include "loophom/loop_assembly.hpp"

#include "loophom/artin.hpp"

#include <map>
#include <algorithm>
#include <stdexcept>
#include <type_traits>
#include <cstdlib>
#include <iostream>
#include <variant>

namespace loophom {

namespace {

/// Relation rows are integer/lifted data; ranks are taken in the field.
template <class F>
struct DegreeSpan {
  explicit DegreeSpan(const F& f) : echelon(f), field(f) {}
  Echelon<F> echelon;
  F field;

  void add(const std::vector<std::pair<int, Rational>>& v) {
    echelon.add_row(to_row(v));
  }
  SparseRow<F> to_row(const std::vector<std::pair<int, Rational>>& v) const {
    std::map<int, typename F::Elem> acc;
    for (const auto& [i, c] : v) {
      typename F::Elem e = convert(c);
      auto it = acc.find(i);
      if (it == acc.end())
        acc.emplace(i, e);
      else
        it->second = field.add(it->second, e);
    }
    SparseRow<F> row;
    for (const auto& [i, e] : acc)
      if (!field.is_zero(e)) row.emplace_back(i, e);
    return row;
  }
  typename F::Elem convert(const Rational& c) const {
    if constexpr (std::is_same_v<F, RationalField>) {
      return c;
    } else {
      auto num = field.from_int(numerator(c).template convert_to<long long>());
      auto den = field.from_int(denominator(c).template convert_to<long long>());
      return field.mul(num, field.inv(den));
    }
  }
  static Rational lift(const typename F::Elem& e) {
    if constexpr (std::is_same_v<F, RationalField>) {
      return e;
    } else {
      return Rational(e);
    }
  }
};

}  // namespace

struct LoopAssembly::Impl {
  SimplicialComplex K;
  std::vector<VertexAlgebra> inputs;
  long long characteristic;
  int cutoff;
  GradedCoalgebra face_coalgebra;

  struct Component {
    MultiDegree I;
    int min_tensor_degree = 0;
    int dmax = 0;
    std::vector<int> slot_color;  // 1-indexed color per slot
    // degree 0 is handled by monoid component bookkeeping: one class per
    // canonical word; the complex and the field machinery only cover the
    // positive degrees and are built only when dmax >= 1
    std::vector<std::vector<int>> canonical_words;
    std::map<std::vector<int>, int> component_of;
    std::unique_ptr<ChainComplex> cx;
    std::unique_ptr<FieldHomology> hom;
    std::vector<std::vector<int>> tensors;
    std::vector<int> tensor_degree;
    std::map<std::vector<int>, int> tensor_index;

    long long hrank(int d) const {
      if (d == 0) return static_cast<long long>(canonical_words.size());
      if (!hom || d < 0 || d > dmax) return 0;
      return hom->rank(d);
    }
  };
  std::vector<Component> comps;
  std::map<MultiDegree, int> comp_index;

  struct VEntry {
    int comp;
    int hdeg;
    int hidx;
    int tidx;
  };
  std::vector<std::vector<VEntry>> ventries;  // per total degree
  std::map<std::tuple<int, int, int, int>, std::pair<int, int>> vindex;

  std::variant<std::vector<DegreeSpan<RationalField>>,
               std::vector<DegreeSpan<PrimeField>>>
      spans;

  Impl(const SimplicialComplex& k, std::vector<VertexAlgebra> in, long long chr,
       int cut)
      : K(k),
        inputs(std::move(in)),
        characteristic(chr),
        cutoff(cut),
        face_coalgebra(exterior_sr_coalgebra(k)) {}

  int slot_degree(const Component& c, const std::vector<int>& tensor,
                  int slot) const {
    return inputs[c.slot_color[slot] - 1].basis[tensor[slot]].degree;
  }

  /// Degree-0 words have singleton letters only; read off the color word.
  std::vector<int> color_sequence(const Word& w) const {
    std::vector<int> colors;
    colors.reserve(w.letters.size());
    for (auto l : w.letters) {
      Face f = face_coalgebra.element(l).mdeg.support();
      colors.push_back(__builtin_ctzll(f) + 1);
    }
    return colors;
  }

  /// Cycle representative of the h-th basis class in degree d.
  Chain rep_chain(const Component& c, int d, int h) const {
    if (d > 0) return c.hom->basis(d)[h];
    Word w;
    for (int color : c.canonical_words[h])
      w.letters.push_back(
          face_coalgebra.index_of_mdeg(MultiDegree::unit(K.vertex_count(), color)));
    if (w.letters.empty())
      throw std::logic_error("the unit class has no representative word");
    return Chain::single(w);
  }

  /// Class coordinates of an integer cycle, via component lookup in degree 0
  /// and the field machinery above.
  std::vector<Rational> coords_of(const Component& c, int d,
                                  const Chain& chain) const {
    if (d > 0) return c.hom->class_coordinates(d, chain);
    std::vector<Rational> out(c.canonical_words.size(), Rational(0));
    for (const auto& [w, coeff] : chain.terms()) {
      auto nf = artin_normal_form(K, color_sequence(w));
      out[c.component_of.at(nf)] += Rational(coeff);
    }
    return out;
  }

  void build_components() {
    int m = K.vertex_count();
    std::vector<int> delta(m);
    for (int j = 0; j < m; ++j)
      delta[j] = inputs[j].basis.empty() ? cutoff + 1 : inputs[j].min_degree();

    std::vector<int> cur(m, 0);
    std::vector<MultiDegree> list;
    auto rec = [&](auto&& self, int pos, int used) -> void {
      if (pos == m) {
        list.emplace_back(cur);
        return;
      }
      for (int v = 0;; ++v) {
        int nused = used + v * delta[pos];
        if (nused > cutoff) break;
        cur[pos] = v;
        self(self, pos + 1, nused);
      }
      cur[pos] = 0;
    };
    rec(rec, 0, 0);
    std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
      int ta = a.total(), tb = b.total();
      return ta != tb ? ta < tb : a < b;
    });

    for (const auto& I : list) {
      Component c;
      c.I = I;
      c.min_tensor_degree = 0;
      for (int j = 0; j < m; ++j) c.min_tensor_degree += I[j] * delta[j];
      c.dmax = cutoff - c.min_tensor_degree;
      for (int j = 1; j <= m; ++j)
        for (int k = 0; k < I[j - 1]; ++k) c.slot_color.push_back(j);
      c.canonical_words = artin_canonical_words(K, I, cutoff + 1);
      for (std::size_t w = 0; w < c.canonical_words.size(); ++w)
        c.component_of[c.canonical_words[w]] = static_cast<int>(w);
      if (!I.is_zero() && c.dmax >= 1) {
        c.cx = std::make_unique<ChainComplex>(face_coalgebra, I, c.dmax + 1);
        c.hom = std::make_unique<FieldHomology>(*c.cx, characteristic, 1);
      }
      // tensor words within the cutoff
      std::vector<int> word(c.slot_color.size(), 0);
      auto trec = [&](auto&& self, std::size_t slot, int deg) -> void {
        if (slot == word.size()) {
          c.tensor_index[word] = static_cast<int>(c.tensors.size());
          c.tensors.push_back(word);
          c.tensor_degree.push_back(deg);
          return;
        }
        const auto& A = inputs[c.slot_color[slot] - 1];
        for (int b = 0; b < static_cast<int>(A.basis.size()); ++b) {
          int nd = deg + A.basis[b].degree;
          if (nd > cutoff) continue;
          word[slot] = b;
          self(self, slot + 1, nd);
        }
      };
      trec(trec, 0, 0);
      comp_index.emplace(I, static_cast<int>(comps.size()));
      comps.push_back(std::move(c));
    }
  }

  void build_vbasis() {
    ventries.assign(cutoff + 1, {});
    for (int ci = 0; ci < static_cast<int>(comps.size()); ++ci) {
      const Component& c = comps[ci];
      for (int d = 0; d <= c.dmax; ++d) {
        long long r = c.hrank(d);
        if (r == 0) continue;
        for (int h = 0; h < r; ++h) {
          for (int ti = 0; ti < static_cast<int>(c.tensors.size()); ++ti) {
            int total = d + c.tensor_degree[ti];
            if (total > cutoff) continue;
            vindex[{ci, d, h, ti}] = {total,
                                      static_cast<int>(ventries[total].size())};
            ventries[total].push_back({ci, d, h, ti});
          }
        }
      }
    }
  }

  template <class F>
  void build_relations(std::vector<DegreeSpan<F>>& spans_f, const F& field) {
    for (int d = 0; d <= cutoff; ++d) spans_f.emplace_back(field);

    for (int ti_comp = 0; ti_comp < static_cast<int>(comps.size()); ++ti_comp) {
      const Component& T = comps[ti_comp];
      if (T.I.is_zero()) continue;
      int m = K.vertex_count();
      for (int j = 1; j <= m; ++j) {
        if (T.I[j - 1] < 2) continue;
        MultiDegree Isrc = T.I - MultiDegree::unit(m, j);
        auto sit = comp_index.find(Isrc);
        if (sit == comp_index.end()) continue;
        const Component& S = comps[sit->second];
        int block_offset = 0;
        for (int cjj = 1; cjj < j; ++cjj) block_offset += T.I[cjj - 1];
        for (int k = 1; k <= T.I[j - 1] - 1; ++k) {
          int pos = block_offset + (k - 1);
          for (int dy = 0; dy <= T.dmax; ++dy) {
            long long srank = S.hrank(dy);
            if (srank == 0) continue;
            long long trank = T.hrank(dy);
            // induced map columns: coordinates of mu(rep) in the target
            std::vector<std::vector<Rational>> mucol(srank);
            for (int y = 0; y < srank; ++y) {
              Chain img = mu_chain(face_coalgebra, j, k, rep_chain(S, dy, y));
              if (trank > 0)
                mucol[y] = coords_of(T, dy, img);
              else if (dy > 0 && T.hom && !T.hom->class_is_zero(dy, img))
                throw std::logic_error("mu image not null in zero homology");
            }
            for (int y = 0; y < srank; ++y) {
              for (int ti = 0; ti < static_cast<int>(T.tensors.size()); ++ti) {
                int total = dy + T.tensor_degree[ti];
                if (total > cutoff) continue;
                const std::vector<int>& t = T.tensors[ti];
                Vector v;
                for (int h = 0; h < trank; ++h) {
                  if (mucol[y][h].is_zero()) continue;
                  auto [deg2, idx] = vindex.at({ti_comp, dy, h, ti});
                  v.emplace_back(idx, mucol[y][h]);
                }
                // Merged side, with coefficient +1: both the doubling and
                // the slot multiplication are degree-0 operators, so the
                // Koszul rule contributes no sign. Position-dependent
                // exponents like deg(y) * (degrees left of the merge) fail
                // the associativity consistency of iterated merges ((ab)c
                // against a(bc) accumulates different parities) and collapse
                // the quotient below the sphere oracle.
                long long sign = 1;
                const auto& A = inputs[j - 1];
                auto pit = A.products.find({t[pos], t[pos + 1]});
                if (pit != A.products.end()) {
                  for (const auto& [b, coeff] : pit->second) {
                    std::vector<int> merged;
                    merged.reserve(t.size() - 1);
                    merged.insert(merged.end(), t.begin(), t.begin() + pos);
                    merged.push_back(b);
                    merged.insert(merged.end(), t.begin() + pos + 2, t.end());
                    int mt = S.tensor_index.at(merged);
                    auto [deg2, idx] = vindex.at({sit->second, dy, y, mt});
                    v.emplace_back(idx, Rational(-sign * coeff));
                  }
                }
                if (!v.empty()) spans_f[total].add(v);
              }
            }
          }
        }
      }
    }
  }

  template <class F>
  void finish(std::vector<DegreeSpan<F>>& spans_f) {
    GradedDims d;
    d.dims.assign(cutoff + 1, 0);
    for (int deg = 0; deg <= cutoff; ++deg)
      d.dims[deg] = static_cast<long long>(ventries[deg].size()) -
                    spans_f[deg].echelon.rank();
    if (std::getenv("LOOPHOM_DEBUG_SPANS")) {
      for (int deg = 0; deg <= cutoff; ++deg)
        std::cerr << "degree " << deg << ": |V| = " << ventries[deg].size()
                  << ", rank = " << spans_f[deg].echelon.rank() << '\n';
    }
    dims_out = std::move(d);
  }

  GradedDims dims_out;
};

LoopAssembly::LoopAssembly(const SimplicialComplex& K,
                           std::vector<VertexAlgebra> inputs,
                           long long characteristic, int cutoff)
    : char_(characteristic), cutoff_(cutoff) {
  if (static_cast<int>(inputs.size()) != K.vertex_count())
    throw std::invalid_argument("one vertex algebra per vertex required");
  for (const auto& a : inputs) a.validate(cutoff);
  if (cutoff < 0) throw std::invalid_argument("negative cutoff");

  impl_ = std::make_unique<Impl>(K, std::move(inputs), characteristic, cutoff);
  impl_->build_components();
  impl_->build_vbasis();
  if (characteristic == 0) {
    impl_->spans.emplace<std::vector<DegreeSpan<RationalField>>>();
    auto& s = std::get<std::vector<DegreeSpan<RationalField>>>(impl_->spans);
    impl_->build_relations(s, RationalField{});
    impl_->finish(s);
  } else {
    impl_->spans.emplace<std::vector<DegreeSpan<PrimeField>>>();
    auto& s = std::get<std::vector<DegreeSpan<PrimeField>>>(impl_->spans);
    impl_->build_relations(s, PrimeField(characteristic));
    impl_->finish(s);
  }
  dims_ = impl_->dims_out;
}

LoopAssembly::~LoopAssembly() = default;

int LoopAssembly::total_degree(const ClassRef& c) const {
  auto it = impl_->comp_index.find(c.I);
  if (it == impl_->comp_index.end())
    throw std::out_of_range("multidegree outside the window");
  const auto& comp = impl_->comps[it->second];
  int d = c.homology_degree;
  for (std::size_t s = 0; s < c.tensor.size(); ++s)
    d += impl_->slot_degree(comp, c.tensor, static_cast<int>(s));
  return d;
}

LoopAssembly::Vector LoopAssembly::vector_of(const ClassRef& c) const {
  auto it = impl_->comp_index.find(c.I);
  if (it == impl_->comp_index.end())
    throw std::out_of_range("multidegree outside the window");
  const auto& comp = impl_->comps[it->second];
  int ti = comp.tensor_index.at(c.tensor);
  auto [deg, idx] =
      impl_->vindex.at({it->second, c.homology_degree, c.basis_index, ti});
  return {{idx, Rational(1)}};
}

LoopAssembly::Vector LoopAssembly::product(const ClassRef& a,
                                           const ClassRef& b) const {
  if (a.I.is_zero()) return vector_of(b);
  if (b.I.is_zero()) return vector_of(a);
  auto ia = impl_->comp_index.find(a.I);
  auto ib = impl_->comp_index.find(b.I);
  MultiDegree T = a.I + b.I;
  auto itc = impl_->comp_index.find(T);
  if (ia == impl_->comp_index.end() || ib == impl_->comp_index.end() ||
      itc == impl_->comp_index.end())
    throw std::out_of_range("cutoff exceeded");
  const auto& ca = impl_->comps[ia->second];
  const auto& cb = impl_->comps[ib->second];
  const auto& ct = impl_->comps[itc->second];
  int dh = a.homology_degree + b.homology_degree;
  if (dh > ct.dmax) throw std::out_of_range("cutoff exceeded");

  // representative concatenation
  Chain prod =
      concat_product(impl_->rep_chain(ca, a.homology_degree, a.basis_index),
                     impl_->rep_chain(cb, b.homology_degree, b.basis_index));
  auto coords = impl_->coords_of(ct, dh, prod);

  // tensor merge: blocks concatenate colorwise; Koszul sign from moving each
  // b-factor past the a-factors of larger color, plus the tensor-product
  // rule sign deg(tensor_a) * deg(homology_b)
  long long expo = 0;
  int dega = 0;
  for (std::size_t s = 0; s < a.tensor.size(); ++s)
    dega += impl_->slot_degree(ca, a.tensor, static_cast<int>(s));
  expo += static_cast<long long>(dega) * b.homology_degree;
  for (std::size_t sa = 0; sa < a.tensor.size(); ++sa)
    for (std::size_t sb = 0; sb < b.tensor.size(); ++sb)
      if (ca.slot_color[sa] > cb.slot_color[sb])
        expo += static_cast<long long>(
                    impl_->slot_degree(ca, a.tensor, static_cast<int>(sa))) *
                impl_->slot_degree(cb, b.tensor, static_cast<int>(sb));
  long long sign = (expo & 1) ? -1 : 1;

  std::vector<int> merged;
  int m = impl_->K.vertex_count();
  std::size_t pa = 0, pb = 0;
  for (int j = 1; j <= m; ++j) {
    for (int k = 0; k < a.I[j - 1]; ++k) merged.push_back(a.tensor[pa++]);
    for (int k = 0; k < b.I[j - 1]; ++k) merged.push_back(b.tensor[pb++]);
  }
  int mt = ct.tensor_index.at(merged);

  Vector out;
  for (std::size_t h = 0; h < coords.size(); ++h) {
    if (coords[h].is_zero()) continue;
    auto [deg, idx] = impl_->vindex.at({itc->second, dh, static_cast<int>(h), mt});
    out.emplace_back(idx, coords[h] * sign);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

LoopAssembly::Vector LoopAssembly::reduce(int degree, Vector v) const {
  return std::visit(
      [&](const auto& spans_f) -> Vector {
        if (degree < 0 || degree > cutoff_) throw std::out_of_range("degree");
        const auto& span = spans_f[degree];
        auto row = span.to_row(v);
        span.echelon.reduce(row);
        Vector out;
        for (const auto& [i, c] : row)
          out.emplace_back(i, std::remove_cvref_t<decltype(span)>::lift(c));
        return out;
      },
      impl_->spans);
}

bool LoopAssembly::is_zero_in_quotient(int degree, Vector v) const {
  return reduce(degree, std::move(v)).empty();
}

bool LoopAssembly::injective_on_multidegree(const MultiDegree& I) const {
  auto it = impl_->comp_index.find(I);
  if (it == impl_->comp_index.end())
    throw std::out_of_range("multidegree outside the window");
  return std::visit(
      [&](const auto& spans_f) {
        for (int deg = 0; deg <= cutoff_; ++deg) {
          auto ech = spans_f[deg].echelon;  // copy
          for (std::size_t p = 0; p < impl_->ventries[deg].size(); ++p) {
            if (impl_->ventries[deg][p].comp != it->second) continue;
            SparseRow<std::remove_cvref_t<decltype(spans_f[deg].field)>> row{
                {static_cast<int>(p), spans_f[deg].field.one()}};
            if (ech.add_row(std::move(row)) < 0) return false;
          }
        }
        return true;
      },
      impl_->spans);
}

GradedDims loop_homology_dims(const SimplicialComplex& K,
                              const std::vector<VertexAlgebra>& inputs,
                              long long characteristic, int cutoff) {
  return LoopAssembly(K, inputs, characteristic, cutoff).dims();
}

GradedDims sphere_oracle_dims(const SimplicialComplex& K,
                              const std::vector<int>& sphere_dims,
                              long long characteristic, int cutoff) {
  int m = K.vertex_count();
  if (static_cast<int>(sphere_dims.size()) != m)
    throw std::invalid_argument("one sphere dimension per vertex required");
  for (int d : sphere_dims)
    if (d < 2) throw std::invalid_argument("sphere dimensions must be >= 2");

  GradedCoalgebra C = exterior_sr_coalgebra(K, sphere_dims);
  GradedDims out;
  out.dims.assign(cutoff + 1, 0);
  out.dims[0] = 1;  // unit

  // a word of multidegree I has degree at least sum_j i_j (d_j - 1)
  std::vector<int> cur(m, 0);
  auto rec = [&](auto&& self, int pos, int minimal) -> void {
    if (pos == m) {
      MultiDegree I(cur);
      if (I.is_zero()) return;
      ChainComplex cx(C, I, cutoff + 1);
      for (const auto& [d, dim] : field_homology(cx, characteristic))
        if (d <= cutoff) out.dims[d] += dim;
      return;
    }
    for (int v = 0;; ++v) {
      int nmin = minimal + v * (sphere_dims[pos] - 1);
      if (nmin > cutoff) break;
      cur[pos] = v;
      self(self, pos + 1, nmin);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, 0);
  return out;
}

}  // namespace loophom
