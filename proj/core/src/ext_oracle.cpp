#include "loophom/ext_oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "loophom/homology.hpp"
#include "loophom/linalg.hpp"

namespace loophom {

FiniteGradedAlgebra::FiniteGradedAlgebra(
    std::vector<Element> basis, int unit,
    std::vector<std::vector<std::pair<int, long long>>> table)
    : basis_(std::move(basis)), unit_(unit) {
  int n = dim();
  table_.assign(n * n, {-1, 0});
  if (static_cast<int>(table.size()) != n)
    throw std::invalid_argument("multiplication table size mismatch");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw std::invalid_argument("multiplication table size mismatch");
    for (int b = 0; b < n; ++b) table_[a * n + b] = table[a][b];
  }
}

bool FiniteGradedAlgebra::is_unital() const {
  for (int a = 0; a < dim(); ++a) {
    if (product(unit_, a) != std::make_pair(a, 1LL)) return false;
    if (product(a, unit_) != std::make_pair(a, 1LL)) return false;
  }
  return true;
}

bool FiniteGradedAlgebra::is_associative() const {
  for (int a = 0; a < dim(); ++a)
    for (int b = 0; b < dim(); ++b)
      for (int c = 0; c < dim(); ++c) {
        auto [ab, cab] = product(a, b);
        auto [bc, cbc] = product(b, c);
        std::pair<int, long long> lhs{-1, 0}, rhs{-1, 0};
        if (ab >= 0) {
          auto [t, ct] = product(ab, c);
          if (t >= 0) lhs = {t, cab * ct};
        }
        if (bc >= 0) {
          auto [t, ct] = product(a, bc);
          if (t >= 0) rhs = {t, cbc * ct};
        }
        if (lhs != rhs) return false;
      }
  return true;
}

bool FiniteGradedAlgebra::is_multidegree_additive() const {
  for (int a = 0; a < dim(); ++a)
    for (int b = 0; b < dim(); ++b) {
      auto [t, c] = product(a, b);
      if (t < 0) continue;
      if (basis_[a].mdeg + basis_[b].mdeg != basis_[t].mdeg) return false;
      if (basis_[a].degree + basis_[b].degree != basis_[t].degree) return false;
    }
  return true;
}

FiniteGradedAlgebra exterior_sr_algebra(const SimplicialComplex& K) {
  int m = K.vertex_count();
  std::vector<FiniteGradedAlgebra::Element> basis;
  std::map<Face, int> index;
  for (Face f : K.faces()) {
    FiniteGradedAlgebra::Element e;
    e.degree = face_size(f);
    e.mdeg = MultiDegree::characteristic(m, f);
    auto vs = face_vertices(f);
    e.label = "v{";
    for (std::size_t i = 0; i < vs.size(); ++i)
      e.label += (i ? "," : "") + std::to_string(vs[i]);
    e.label += '}';
    index[f] = static_cast<int>(basis.size());
    basis.push_back(std::move(e));
  }
  int n = static_cast<int>(basis.size());
  std::vector<std::vector<std::pair<int, long long>>> table(
      n, std::vector<std::pair<int, long long>>(n, {-1, 0}));
  for (const auto& [f, i] : index) {
    for (const auto& [g, j] : index) {
      if (f & g) continue;
      Face u = f | g;
      auto it = index.find(u);
      if (it == index.end()) continue;
      long long sign = (epsilon_sign(f, g) & 1) ? -1 : 1;
      table[i][j] = {it->second, sign};
    }
  }
  return FiniteGradedAlgebra(std::move(basis), index.at(0), std::move(table));
}

namespace {

/// Element of a free module over A: sparse list of (generator, algebra basis
/// element, coefficient).
template <class F>
struct Resolver {
  const F field;
  const FiniteGradedAlgebra& A;
  int bound;

  // free-module slice basis: (generator index, algebra basis index)
  struct Slice {
    std::vector<std::pair<int, int>> basis;
    std::map<std::pair<int, int>, int> index;
  };

  explicit Resolver(const F& f, const FiniteGradedAlgebra& a, int b)
      : field(f), A(a), bound(b) {}

  using ModuleElem = std::vector<std::tuple<int, int, typename F::Elem>>;

  std::map<std::pair<int, MultiDegree>, long long> run() {
    int m = A.element(0).mdeg.size();
    std::map<std::pair<int, MultiDegree>, long long> betti;
    betti[{0, MultiDegree::zero(m)}] = 1;

    // step n state: generator multidegrees and their images in F_{n-1}
    std::vector<MultiDegree> prev{MultiDegree::zero(m)};  // F_0 = A
    std::vector<MultiDegree> cur;
    std::vector<ModuleElem> images;

    for (int n = 0; n < bound; ++n) {
      // kernel of F_n -> F_{n-1} per multidegree slice; for n = 0 the map is
      // the augmentation, whose kernel is spanned by the non-unit elements
      std::map<MultiDegree, std::vector<SparseRow<F>>> kernel_slices;
      std::map<MultiDegree, Slice> slices_n;
      const std::vector<MultiDegree>& gens_n = n == 0 ? prev : cur;

      for (const auto& I : multidegrees_up_to(m, bound)) {
        Slice sn = make_slice(gens_n, I);
        if (sn.basis.empty()) continue;
        slices_n[I] = sn;
        std::vector<SparseRow<F>>& kernel = kernel_slices[I];
        if (n == 0) {
          if (I.is_zero()) continue;  // the unit maps to 1
          for (std::size_t c = 0; c < sn.basis.size(); ++c)
            kernel.push_back({{static_cast<int>(c), field.one()}});
          continue;
        }
        Slice sp = make_slice(prev, I);
        Echelon<F> ech(field);
        for (std::size_t c = 0; c < sn.basis.size(); ++c) {
          const auto& [g, a] = sn.basis[c];
          SparseRow<F> col = act(images[g], a, sp);
          SparseRow<F> aug{{static_cast<int>(c), field.one()}};
          if (ech.add_row(std::move(col), &aug) < 0)
            kernel.push_back(std::move(aug));
        }
      }

      // minimal generators: kernel slice modulo (augmentation ideal) * kernel
      std::vector<MultiDegree> next_mdeg;
      std::vector<ModuleElem> next_images;
      for (const auto& I : multidegrees_up_to(m, bound)) {
        auto kit = kernel_slices.find(I);
        if (kit == kernel_slices.end() || kit->second.empty()) continue;
        const Slice& sn = slices_n.at(I);
        Echelon<F> span(field);
        for (int ai = 0; ai < A.dim(); ++ai) {
          if (ai == A.unit_index()) continue;
          const MultiDegree& amd = A.element(ai).mdeg;
          if (!amd.leq(I)) continue;
          MultiDegree J = I - amd;
          auto jt = kernel_slices.find(J);
          if (jt == kernel_slices.end()) continue;
          const Slice& sj = slices_n.at(J);
          for (const auto& z : jt->second) {
            ModuleElem ze;
            for (const auto& [idx, c] : z) {
              auto [g, a] = sj.basis[idx];
              ze.emplace_back(g, a, c);
            }
            span.add_row(act(ze, ai, sn));
          }
        }
        for (const auto& z : kit->second) {
          SparseRow<F> copy = z;
          if (span.add_row(std::move(copy)) >= 0) {
            next_mdeg.push_back(I);
            ModuleElem img;
            for (const auto& [idx, c] : z) {
              auto [g, a] = sn.basis[idx];
              img.emplace_back(g, a, c);
            }
            next_images.push_back(std::move(img));
            betti[{n + 1, I}] += 1;
          }
        }
      }

      if (n > 0) prev = cur;
      cur = next_mdeg;
      images = next_images;
      if (cur.empty()) break;
    }
    return betti;
  }

  /// Left-multiplies a module element by the algebra basis element `ai` and
  /// expresses the result in the given slice.
  SparseRow<F> act(const ModuleElem& z, int ai, const Slice& slice) {
    std::map<int, typename F::Elem> acc;
    for (const auto& [g, a, c] : z) {
      auto [t, ct] = A.product(ai, a);
      if (t < 0) continue;
      int row = slice.index.at({g, t});
      auto add = field.mul(c, field.from_int(ct));
      auto it = acc.find(row);
      if (it == acc.end())
        acc.emplace(row, add);
      else
        it->second = field.add(it->second, add);
    }
    SparseRow<F> out;
    for (const auto& [r, v] : acc)
      if (!field.is_zero(v)) out.emplace_back(r, v);
    return out;
  }

  Slice make_slice(const std::vector<MultiDegree>& gens, const MultiDegree& I) {
    Slice s;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      if (!gens[g].leq(I)) continue;
      MultiDegree need = I - gens[g];
      if (!need.is_squarefree()) continue;
      for (int a = 0; a < A.dim(); ++a) {
        if (A.element(a).mdeg == need) {
          s.index[{static_cast<int>(g), a}] = static_cast<int>(s.basis.size());
          s.basis.emplace_back(static_cast<int>(g), a);
        }
      }
    }
    return s;
  }
};

}  // namespace

std::map<std::pair<int, MultiDegree>, long long> minimal_resolution_betti(
    const FiniteGradedAlgebra& A, long long characteristic, int bound) {
  // connectedness: the unit is the unique multidegree-zero element
  for (int i = 0; i < A.dim(); ++i)
    if (i != A.unit_index() && A.element(i).mdeg.is_zero())
      throw std::invalid_argument("algebra is not connected");
  if (bound < 0) throw std::invalid_argument("negative bound");
  if (characteristic == 0) {
    Resolver<RationalField> r(RationalField{}, A, bound);
    return r.run();
  }
  Resolver<PrimeField> r(PrimeField(characteristic), A, bound);
  return r.run();
}

CotorReport verify_cotor_iso(const SimplicialComplex& K, long long characteristic,
                             int bound) {
  CotorReport report;
  auto A = exterior_sr_algebra(K);
  auto tor = minimal_resolution_betti(A, characteristic, bound);
  int m = K.vertex_count();
  for (const auto& I : multidegrees_up_to(m, bound)) {
    std::map<int, long long> cobar_dims;
    if (I.total() == 0) {
      cobar_dims[0] = 1;  // the unit component is a point
    } else {
      auto cx = tk_complex(K, I);
      for (const auto& [k, dim] : field_homology(cx, characteristic))
        cobar_dims[k] = dim;
    }
    for (int n = 0; n <= I.total(); ++n) {
      long long dt = 0, dc = 0;
      if (auto it = tor.find({n, I}); it != tor.end()) dt = it->second;
      if (auto it = cobar_dims.find(I.total() - n); it != cobar_dims.end())
        dc = it->second;
      if (dt == 0 && dc == 0) continue;
      bool match = dt == dc;
      report.rows.push_back({n, I, dt, dc, match});
      report.all_match = report.all_match && match;
    }
  }
  return report;
}

}  // namespace loophom
