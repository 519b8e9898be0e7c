#include "loophom/arrangements.hpp"

#include <stdexcept>

#include "loophom/homology.hpp"

namespace loophom {

ArrangementDescription multidegree_to_arrangement(const SimplicialComplex& K,
                                                  const MultiDegree& I) {
  int m = K.vertex_count();
  if (I.size() != m) throw std::invalid_argument("multidegree size mismatch");
  ArrangementDescription out;

  auto blocks_of = [](const SimplicialComplex& L) {
    std::vector<std::vector<int>> blocks;
    for (Face tau : missing_faces(L)) blocks.push_back(face_vertices(tau));
    return blocks;
  };

  bool unit = I.total() == m && I.is_squarefree();
  if (unit) {
    out.which = ArrangementDescription::Case::kUnitMultidegree;
    out.ambient_dim = m;
    out.diagonal_blocks = blocks_of(K);
    return out;
  }
  if (I.is_squarefree()) {
    out.which = ArrangementDescription::Case::kSubcomplex;
    auto L = full_subcomplex(K, I.support());
    out.ambient_dim = L.vertex_count();
    out.diagonal_blocks = blocks_of(L);
    return out;
  }

  out.which = ArrangementDescription::Case::kChambers;
  auto L = full_subcomplex(K, I.support());
  std::vector<SimplicialComplex> blocks;
  std::vector<int> counts;
  for (int j = 0; j < m; ++j)
    if (I[j] > 0) {
      blocks.push_back(vertices_only(I[j]));
      counts.push_back(I[j]);
    }
  auto Kprime = compose(L, blocks);
  out.ambient_dim = Kprime.vertex_count();
  out.diagonal_blocks = blocks_of(Kprime);
  int offset = 0;
  int color = 0;
  for (int j = 0; j < m; ++j) {
    if (I[j] == 0) continue;
    if (I[j] >= 2) {
      ArrangementDescription::ChamberOrder ord;
      ord.color = j + 1;
      for (int t = 1; t <= I[j]; ++t) ord.coordinates.push_back(offset + t);
      out.chambers.push_back(std::move(ord));
    }
    offset += counts[color++];
  }
  return out;
}

namespace {

int max_of(const std::vector<int>& v) {
  int mx = 0;
  for (int x : v) mx = std::max(mx, x);
  return mx;
}

bool condition_holds(const std::vector<int>& J, const std::vector<int>& nextI,
                     bool last, NoEqualInterpretation interp,
                     NoEqualDirection dir) {
  if (nextI.empty()) {
    switch (interp) {
      case NoEqualInterpretation::kVacuousWhenEmpty:
        return true;
      case NoEqualInterpretation::kRequireNonempty:
        return false;
      case NoEqualInterpretation::kInternalOnly:
        return last;
    }
  }
  return dir == NoEqualDirection::kAsPrinted ? max_of(J) < max_of(nextI)
                                             : max_of(J) > max_of(nextI);
}

}  // namespace

std::map<int, long long> no_k_equal_betti_by_enumeration(
    int m, int s, NoEqualInterpretation interp, NoEqualDirection dir) {
  if (s < 3) throw std::invalid_argument("need s >= 3");
  if (m < 1 || m > 16) throw std::invalid_argument("m out of enumeration range");
  std::map<int, long long> out;
  for (int k = 0; s * k <= m; ++k) {
    // assign every element of [m] to one of I_1..I_{k+1} (blocks 0..k) or
    // J_1..J_k (blocks k+1..2k)
    int nblocks = 2 * k + 1;
    std::vector<std::vector<int>> blocks(nblocks);
    long long count = 0;
    auto rec = [&](auto&& self, int elem) -> void {
      if (elem > m) {
        for (int i = 0; i < k; ++i)
          if (static_cast<int>(blocks[k + 1 + i].size()) != s) return;
        for (int i = 0; i < k; ++i) {
          bool last = i == k - 1;
          if (!condition_holds(blocks[k + 1 + i], blocks[i + 1], last, interp,
                               dir))
            return;
        }
        ++count;
        return;
      }
      for (int b = 0; b < nblocks; ++b) {
        if (b > k && static_cast<int>(blocks[b].size()) == s) continue;
        blocks[b].push_back(elem);
        self(self, elem + 1);
        blocks[b].pop_back();
      }
    };
    rec(rec, 1);
    out[(s - 2) * k] = count;
  }
  return out;
}

NoEqualComparison no_k_equal_comparison(int m, int s,
                                        NoEqualInterpretation interp,
                                        NoEqualDirection dir) {
  NoEqualComparison out;
  auto counts = no_k_equal_betti_by_enumeration(m, s, interp, dir);
  auto K = skeleton_of_simplex(m, s - 2);
  auto cx = tk_complex(K, MultiDegree(std::vector<int>(m, 1)));
  auto H = integer_homology(cx);
  int top = cx.max_degree();
  for (int d = 0; d <= top; ++d) {
    long long en = counts.count(d) ? counts.at(d) : 0;
    long long rk = H.count(d) ? H.at(d).rank : 0;
    if (en == 0 && rk == 0) continue;
    bool match = en == rk;
    out.rows.push_back({d, en, rk, match});
    out.all_match = out.all_match && match;
  }
  return out;
}

TorsionReport shifted_torsion_report(const SimplicialComplex& K, int bound) {
  if (!is_shifted(K))
    throw std::invalid_argument("complex is not shifted; the claim does not apply");
  TorsionReport out;
  for (const auto& I : multidegrees_up_to(K.vertex_count(), bound)) {
    if (I.total() == 0) continue;
    ++out.multidegrees_scanned;
    auto H = integer_homology(tk_complex(K, I));
    for (const auto& [d, g] : H)
      if (!g.torsion.empty()) out.violations.push_back({I, d});
  }
  return out;
}

}  // namespace loophom
