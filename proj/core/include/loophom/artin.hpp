#pragma once

#include <vector>

#include "loophom/simplicial.hpp"

namespace loophom {

/// Lexicographically least word in the commutation class of `word`, where
/// generators i and j commute iff {i, j} is an edge of K. Idempotent.
std::vector<int> artin_normal_form(const SimplicialComplex& K,
                                   const std::vector<int>& word);

bool artin_equal(const SimplicialComplex& K, const std::vector<int>& a,
                 const std::vector<int>& b);

/// Number of monoid elements with abelianization I, by depth-first
/// enumeration of canonical words with prefix pruning.
long long artin_count_by_multidegree(const SimplicialComplex& K,
                                     const MultiDegree& I,
                                     int budget = 24);

/// The canonical (lexicographically least) words themselves, in
/// lexicographic order; one per monoid element of abelianization I.
std::vector<std::vector<int>> artin_canonical_words(const SimplicialComplex& K,
                                                    const MultiDegree& I,
                                                    int budget = 24);

}  // namespace loophom
