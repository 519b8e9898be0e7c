#pragma once

#include <random>
#include <string>
#include <vector>

#include "loophom/simplicial.hpp"

namespace loophom {

struct NamedComplex {
  std::string name;
  SimplicialComplex K;
};

/// Fixed 20-complex corpus on at most 5 vertices used by the verification
/// suite and the acceptance tests.
const std::vector<NamedComplex>& builtin_corpus();

/// Complex with random facets on m vertices; vertices left uncovered are
/// promoted to singleton facets.
SimplicialComplex random_complex(std::mt19937& rng, int m);

}  // namespace loophom
