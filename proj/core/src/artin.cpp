#include "loophom/artin.hpp"

#include <stdexcept>

namespace loophom {

namespace {

bool commute(const SimplicialComplex& K, int a, int b) {
  return a != b && K.contains(face_of({a, b}));
}

}  // namespace

std::vector<int> artin_normal_form(const SimplicialComplex& K,
                                   const std::vector<int>& word) {
  for (int g : word)
    if (g < 1 || g > K.vertex_count())
      throw std::invalid_argument("generator index out of range");
  std::vector<int> rest = word;
  std::vector<int> out;
  out.reserve(word.size());
  while (!rest.empty()) {
    // initial letters: occurrences movable to the front
    int best = -1, best_pos = -1;
    for (std::size_t p = 0; p < rest.size(); ++p) {
      bool initial = true;
      for (std::size_t q = 0; q < p && initial; ++q)
        if (!commute(K, rest[q], rest[p])) initial = false;
      if (initial && (best < 0 || rest[p] < best)) {
        best = rest[p];
        best_pos = static_cast<int>(p);
      }
    }
    out.push_back(best);
    rest.erase(rest.begin() + best_pos);
  }
  return out;
}

bool artin_equal(const SimplicialComplex& K, const std::vector<int>& a,
                 const std::vector<int>& b) {
  return artin_normal_form(K, a) == artin_normal_form(K, b);
}

namespace {

/// Canonical words: appending g is allowed iff every letter of the maximal
/// commuting suffix is smaller than g.
template <class Visit>
void enumerate_canonical(const SimplicialComplex& K, const MultiDegree& I,
                         int budget, Visit&& visit) {
  if (I.size() != K.vertex_count())
    throw std::invalid_argument("multidegree size mismatch");
  if (I.total() > budget) throw std::invalid_argument("enumeration budget exceeded");
  std::vector<int> remaining(I.entries());
  std::vector<int> word;
  int total = I.total();
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(word.size()) == total) {
      visit(word);
      return;
    }
    for (int g = 1; g <= K.vertex_count(); ++g) {
      if (remaining[g - 1] == 0) continue;
      bool ok = true;
      for (int q = static_cast<int>(word.size()) - 1; q >= 0; --q) {
        if (!commute(K, word[q], g)) break;
        if (word[q] > g) { ok = false; break; }
      }
      if (!ok) continue;
      --remaining[g - 1];
      word.push_back(g);
      self(self);
      word.pop_back();
      ++remaining[g - 1];
    }
  };
  rec(rec);
}

}  // namespace

long long artin_count_by_multidegree(const SimplicialComplex& K,
                                     const MultiDegree& I, int budget) {
  long long count = 0;
  enumerate_canonical(K, I, budget, [&](const std::vector<int>&) { ++count; });
  return count;
}

std::vector<std::vector<int>> artin_canonical_words(const SimplicialComplex& K,
                                                    const MultiDegree& I,
                                                    int budget) {
  std::vector<std::vector<int>> out;
  enumerate_canonical(K, I, budget,
                      [&](const std::vector<int>& w) { out.push_back(w); });
  return out;
}

}  // namespace loophom
