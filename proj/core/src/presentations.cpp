#include "loophom/presentations.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "loophom/linalg.hpp"

namespace loophom {

void AlgebraPresentation::validate() const {
  std::set<std::string> names;
  for (const auto& g : generators) {
    if (g.degree < 0) throw std::invalid_argument("negative generator degree");
    if (!names.insert(g.name).second)
      throw std::invalid_argument("duplicate generator name: " + g.name);
  }
  bool all_mdeg = std::all_of(generators.begin(), generators.end(),
                              [](const Generator& g) { return g.mdeg.has_value(); });
  for (const auto& r : relations) {
    if (r.empty()) continue;
    auto degree_of = [&](const Term& t) {
      int d = 0;
      for (int g : t.first) d += generators.at(g).degree;
      return d;
    };
    int d0 = degree_of(r.front());
    for (const auto& t : r)
      if (degree_of(t) != d0)
        throw std::invalid_argument("relation is not degree-homogeneous");
    if (all_mdeg && !generators.empty()) {
      auto mdeg_of = [&](const Term& t) {
        MultiDegree I = MultiDegree::zero(generators.front().mdeg->size());
        for (int g : t.first) I = I + *generators[g].mdeg;
        return I;
      };
      MultiDegree I0 = mdeg_of(r.front());
      for (const auto& t : r)
        if (mdeg_of(t) != I0)
          throw std::invalid_argument("relation is not multidegree-homogeneous");
    }
  }
}

namespace {

struct WordKey {
  std::vector<int> letters;
  bool operator<(const WordKey& o) const { return letters < o.letters; }
};

// all words with total degree exactly d (degrees >= 1)
void words_of_degree(const AlgebraPresentation& P, int d, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (d == 0) {
    out.push_back(cur);
    return;
  }
  for (int g = 0; g < static_cast<int>(P.generators.size()); ++g) {
    int gd = P.generators[g].degree;
    if (gd > d) continue;
    cur.push_back(g);
    words_of_degree(P, d - gd, cur, out);
    cur.pop_back();
  }
}

template <class F>
GradedDims quotient_dims_impl(const F& f, const AlgebraPresentation& P,
                              int cutoff) {
  GradedDims out;
  out.dims.assign(cutoff + 1, 0);
  // word bases per degree
  std::vector<std::map<WordKey, int>> index(cutoff + 1);
  std::vector<std::vector<std::vector<int>>> words(cutoff + 1);
  for (int d = 0; d <= cutoff; ++d) {
    std::vector<int> cur;
    words_of_degree(P, d, cur, words[d]);
    std::sort(words[d].begin(), words[d].end());
    for (std::size_t i = 0; i < words[d].size(); ++i)
      index[d][WordKey{words[d][i]}] = static_cast<int>(i);
  }
  // relation degrees
  std::vector<int> rel_deg;
  for (const auto& r : P.relations) {
    int d = 0;
    if (!r.empty())
      for (int g : r.front().first) d += P.generators[g].degree;
    rel_deg.push_back(d);
  }
  for (int d = 0; d <= cutoff; ++d) {
    Echelon<F> ech(f);
    for (std::size_t ri = 0; ri < P.relations.size(); ++ri) {
      int dr = rel_deg[ri];
      if (dr > d || P.relations[ri].empty()) continue;
      for (int du = 0; du + dr <= d; ++du) {
        int dv = d - dr - du;
        for (const auto& u : words[du]) {
          for (const auto& v : words[dv]) {
            SparseRow<F> row;
            std::map<int, typename F::Elem> acc;
            for (const auto& [w, c] : P.relations[ri]) {
              std::vector<int> full;
              full.reserve(u.size() + w.size() + v.size());
              full.insert(full.end(), u.begin(), u.end());
              full.insert(full.end(), w.begin(), w.end());
              full.insert(full.end(), v.begin(), v.end());
              int col = index[d].at(WordKey{std::move(full)});
              auto add = f.from_int(c);
              auto it = acc.find(col);
              if (it == acc.end())
                acc.emplace(col, add);
              else
                it->second = f.add(it->second, add);
            }
            for (const auto& [cidx, val] : acc)
              if (!f.is_zero(val)) row.emplace_back(cidx, val);
            ech.add_row(std::move(row));
          }
        }
      }
    }
    out.dims[d] = static_cast<long long>(words[d].size()) - ech.rank();
  }
  return out;
}

template <class F>
std::map<std::pair<MultiDegree, int>, long long> quotient_dims_windowed_impl(
    const F& f, const AlgebraPresentation& P, int bound) {
  int m = P.generators.front().mdeg->size();
  // enumerate words with |multidegree| <= bound, grouped by (I, degree)
  std::map<std::pair<MultiDegree, int>, std::vector<std::vector<int>>> words;
  std::vector<int> cur;
  MultiDegree acc = MultiDegree::zero(m);
  int deg = 0;
  auto rec = [&](auto&& self) -> void {
    words[{acc, deg}].push_back(cur);
    for (int g = 0; g < static_cast<int>(P.generators.size()); ++g) {
      const auto& gm = *P.generators[g].mdeg;
      if (acc.total() + gm.total() > bound) continue;
      cur.push_back(g);
      acc = acc + gm;
      deg += P.generators[g].degree;
      self(self);
      deg -= P.generators[g].degree;
      acc = acc - gm;
      cur.pop_back();
    }
  };
  rec(rec);
  for (auto& [key, list] : words) std::sort(list.begin(), list.end());

  std::map<std::pair<MultiDegree, int>, long long> out;
  for (const auto& [key, list] : words) {
    std::map<WordKey, int> index;
    for (std::size_t i = 0; i < list.size(); ++i)
      index[WordKey{list[i]}] = static_cast<int>(i);
    Echelon<F> ech(f);
    // ideal slice: u * r * v landing in this (I, degree)
    for (const auto& r : P.relations) {
      if (r.empty()) continue;
      MultiDegree rm = MultiDegree::zero(m);
      int rd = 0;
      for (int g : r.front().first) {
        rm = rm + *P.generators[g].mdeg;
        rd += P.generators[g].degree;
      }
      if (!rm.leq(key.first) || rd > key.second) continue;
      MultiDegree rem = key.first - rm;
      int remdeg = key.second - rd;
      // all pad pairs (u, v) with mdeg(u) + mdeg(v) = rem, deg sum = remdeg
      for (const auto& [ukey, ulist] : words) {
        if (!ukey.first.leq(rem) || ukey.second > remdeg) continue;
        MultiDegree vm = rem - ukey.first;
        int vd = remdeg - ukey.second;
        auto vit = words.find({vm, vd});
        if (vit == words.end()) continue;
        for (const auto& u : ulist) {
          for (const auto& v : vit->second) {
            std::map<int, typename F::Elem> accm;
            for (const auto& [w, c] : r) {
              std::vector<int> full;
              full.reserve(u.size() + w.size() + v.size());
              full.insert(full.end(), u.begin(), u.end());
              full.insert(full.end(), w.begin(), w.end());
              full.insert(full.end(), v.begin(), v.end());
              int col = index.at(WordKey{std::move(full)});
              auto add = f.from_int(c);
              auto it = accm.find(col);
              if (it == accm.end())
                accm.emplace(col, add);
              else
                it->second = f.add(it->second, add);
            }
            SparseRow<F> row;
            for (const auto& [cidx, val] : accm)
              if (!f.is_zero(val)) row.emplace_back(cidx, val);
            ech.add_row(std::move(row));
          }
        }
      }
    }
    long long dim = static_cast<long long>(list.size()) - ech.rank();
    if (dim != 0) out[key] = dim;
  }
  return out;
}

}  // namespace

GradedDims quotient_dims(const AlgebraPresentation& P, long long characteristic,
                         int cutoff) {
  P.validate();
  for (const auto& g : P.generators)
    if (g.degree == 0)
      throw std::invalid_argument(
          "degree-0 part fails to stabilize: degree-0 generators need the "
          "multidegree-windowed variant");
  if (characteristic == 0)
    return quotient_dims_impl(RationalField{}, P, cutoff);
  return quotient_dims_impl(PrimeField(characteristic), P, cutoff);
}

std::map<std::pair<MultiDegree, int>, long long> quotient_dims_windowed(
    const AlgebraPresentation& P, long long characteristic, int bound) {
  P.validate();
  for (const auto& g : P.generators)
    if (!g.mdeg || g.mdeg->is_zero())
      throw std::invalid_argument(
          "windowed dimension counting needs a nonzero multidegree per generator");
  if (characteristic == 0)
    return quotient_dims_windowed_impl(RationalField{}, P, bound);
  return quotient_dims_windowed_impl(PrimeField(characteristic), P, bound);
}

AlgebraPresentation flag_presentation(const SimplicialComplex& K,
                                      const std::vector<AlgebraPresentation>& vertex) {
  if (!is_flag(K)) throw std::invalid_argument("complex is not flag");
  int m = K.vertex_count();
  if (static_cast<int>(vertex.size()) != m)
    throw std::invalid_argument("one presentation per vertex required");

  AlgebraPresentation out;
  std::vector<int> offset(m + 1, 0);
  for (int i = 0; i < m; ++i) {
    offset[i + 1] = offset[i] + static_cast<int>(vertex[i].generators.size());
    for (const auto& g : vertex[i].generators) {
      AlgebraPresentation::Generator ng;
      ng.name = g.name + "@" + std::to_string(i + 1);
      ng.degree = g.degree;
      ng.mdeg = MultiDegree::unit(m, i + 1);
      out.generators.push_back(std::move(ng));
    }
    for (const auto& r : vertex[i].relations) {
      AlgebraPresentation::Relation nr;
      for (const auto& [w, c] : r) {
        std::vector<int> nw;
        for (int g : w) nw.push_back(g + offset[i]);
        nr.emplace_back(std::move(nw), c);
      }
      out.relations.push_back(std::move(nr));
    }
  }
  for (Face e : K.faces()) {
    if (face_size(e) != 2) continue;
    auto vs = face_vertices(e);
    int i = vs[0] - 1, j = vs[1] - 1;
    for (int a = 0; a < static_cast<int>(vertex[i].generators.size()); ++a) {
      for (int b = 0; b < static_cast<int>(vertex[j].generators.size()); ++b) {
        int ga = offset[i] + a, gb = offset[j] + b;
        long long sign =
            (vertex[i].generators[a].degree * vertex[j].generators[b].degree) & 1
                ? -1
                : 1;
        out.relations.push_back(
            {{{ga, gb}, 1}, {{gb, ga}, -sign}});
      }
    }
  }
  out.validate();
  return out;
}

AlgebraPresentation skeleton_tk_presentation(int m, int s,
                                             BracketOrientation bracket) {
  if (s < 3 || s > m) throw std::invalid_argument("need 3 <= s <= m");
  AlgebraPresentation P;
  for (int j = 1; j <= m; ++j)
    P.generators.push_back({"x" + std::to_string(j), 0, MultiDegree::unit(m, j)});
  std::map<Face, int> omega;
  Face top = (Face{1} << m) - 1;
  for (Face J = top; J; J = (J - 1) & top) {
    if (face_size(J) != s) continue;
    omega[J] = static_cast<int>(P.generators.size());
    std::string name = "w{";
    auto vs = face_vertices(J);
    for (std::size_t i = 0; i < vs.size(); ++i)
      name += (i ? "," : "") + std::to_string(vs[i]);
    P.generators.push_back({name + "}", s - 2, MultiDegree::characteristic(m, J)});
  }
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      P.relations.push_back({{{i - 1, j - 1}, 1}, {{j - 1, i - 1}, -1}});
  long long brace = bracket == BracketOrientation::kCommutator ? -1 : 1;
  for (Face S = top; S; S = (S - 1) & top) {
    if (face_size(S) != s + 1) continue;
    AlgebraPresentation::Relation rel;
    for (int j : face_vertices(S)) {
      Face J = S & ~(Face{1} << (j - 1));
      int eps = epsilon_sign(Face{1} << (j - 1), J);  // #{i in S : i < j}
      long long sign = (eps & 1) ? -1 : 1;
      rel.push_back({{j - 1, omega.at(J)}, sign});
      rel.push_back({{omega.at(J), j - 1}, sign * brace});
    }
    P.relations.push_back(std::move(rel));
  }
  P.validate();
  return P;
}

AlgebraPresentation dj_presentation(int m, int s) {
  if (s < 3 || s > m) throw std::invalid_argument("need 3 <= s <= m");
  AlgebraPresentation P;
  for (int j = 1; j <= m; ++j)
    P.generators.push_back({"u" + std::to_string(j), 1, MultiDegree::unit(m, j)});
  std::map<Face, int> omega;
  Face top = (Face{1} << m) - 1;
  for (Face J = top; J; J = (J - 1) & top) {
    if (face_size(J) != s) continue;
    omega[J] = static_cast<int>(P.generators.size());
    std::string name = "w{";
    auto vs = face_vertices(J);
    for (std::size_t i = 0; i < vs.size(); ++i)
      name += (i ? "," : "") + std::to_string(vs[i]);
    P.generators.push_back(
        {name + "}", 2 * s - 2, MultiDegree::characteristic(m, J)});
  }
  // [u_i, u_j] = u_i u_j + u_j u_i (odd degrees), including i = j
  for (int i = 1; i <= m; ++i)
    for (int j = i; j <= m; ++j)
      P.relations.push_back({{{i - 1, j - 1}, 1}, {{j - 1, i - 1}, 1}});
  // [u_j, w_J] = u_j w_J - w_J u_j for j in J (w has even degree)
  for (const auto& [J, w] : omega)
    for (int j : face_vertices(J))
      P.relations.push_back({{{j - 1, w}, 1}, {{w, j - 1}, -1}});
  for (Face S = top; S; S = (S - 1) & top) {
    if (face_size(S) != s + 1) continue;
    AlgebraPresentation::Relation rel;
    for (int j : face_vertices(S)) {
      Face J = S & ~(Face{1} << (j - 1));
      rel.push_back({{j - 1, omega.at(J)}, 1});
      rel.push_back({{omega.at(J), j - 1}, -1});
    }
    P.relations.push_back(std::move(rel));
  }
  P.validate();
  return P;
}

AlgebraPresentation poly_presentation(int degree) {
  AlgebraPresentation P;
  P.generators.push_back({"u", degree, std::nullopt});
  return P;
}

AlgebraPresentation exterior_presentation(int degree) {
  AlgebraPresentation P;
  P.generators.push_back({"u", degree, std::nullopt});
  P.relations.push_back({{{0, 0}, 1}});
  return P;
}

}  // namespace loophom
