#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <unordered_map>
#include <vector>

#include "loophom/coalgebra.hpp"
#include "loophom/sparse.hpp"

namespace loophom {

/// Tensor word: a nonempty sequence of non-counit coalgebra basis indices.
struct Word {
  std::vector<std::int32_t> letters;

  bool operator==(const Word& o) const { return letters == o.letters; }
  bool operator<(const Word& o) const { return letters < o.letters; }
  int length() const { return static_cast<int>(letters.size()); }
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (auto x : w.letters) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

int word_degree(const GradedCoalgebra& C, const Word& w);
MultiDegree word_multidegree(const GradedCoalgebra& C, const Word& w);
std::string word_to_string(const GradedCoalgebra& C, const Word& w);

/// Sparse integer combination of words, homogeneous in degree and
/// multidegree (enforced by the operations that produce it).
class Chain {
public:
  Chain() = default;
  explicit Chain(std::map<Word, long long> terms) : terms_(std::move(terms)) {
    prune();
  }
  static Chain single(Word w, long long c = 1) {
    Chain out;
    if (c != 0) out.terms_[std::move(w)] = c;
    return out;
  }

  const std::map<Word, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(const Word& w, long long c);
  Chain& operator+=(const Chain& o);
  Chain operator*(long long c) const;
  bool operator==(const Chain& o) const { return terms_ == o.terms_; }

  /// Fails on words of inconsistent grading.
  int degree(const GradedCoalgebra& C) const;
  MultiDegree multidegree(const GradedCoalgebra& C) const;

  std::string to_string(const GradedCoalgebra& C) const;

private:
  void prune();
  std::map<Word, long long> terms_;
};

/// Cobar differential of a single word:
///   d(w_1 .. w_n) = sum over positions r and reduced-coproduct splits
///   (a, b) of w_r of
///     (-1)^{sum_{t<r} (deg_C(w_t) - 1)} * coeff(a, b) * (-1)^{deg_C(a)}
///   (w_1 .. w_{r-1} a b w_{r+1} .. w_n).
/// For the exterior face coalgebra with unit degrees the one-letter case is
///   d(sigma) = sum (-1)^{epsilon(s1, s2) + |s1|} (s1 | s2).
Chain differential(const GradedCoalgebra& C, const Word& w);
Chain differential(const GradedCoalgebra& C, const Chain& c);

/// Word-wise concatenation extended bilinearly; the free product of the
/// tensor algebra. Satisfies d(ab) = d(a) b + (-1)^{deg a} a d(b).
Chain concat_product(const Chain& a, const Chain& b);

/// The part of the cobar construction on C in a single multidegree:
/// per-degree word bases and sparse integer boundary matrices. When
/// max_degree is set, only degree slices <= max_degree are built (homology
/// is then valid in degrees < max_degree).
class ChainComplex {
public:
  ChainComplex(const GradedCoalgebra& C, MultiDegree I,
               std::optional<int> max_degree = std::nullopt);

  const GradedCoalgebra& coalgebra() const { return *C_; }
  const MultiDegree& multidegree() const { return I_; }
  std::optional<int> truncation() const { return max_degree_; }

  int min_degree() const;
  int max_degree() const;  // largest degree with a (possibly empty) slice
  int dim(int degree) const;
  const std::vector<Word>& basis(int degree) const;
  int index_of(const Word& w) const;  // -1 if absent
  /// boundary matrix C_d -> C_{d-1}
  const SparseIntMat& boundary(int degree) const;

  /// Chain -> coefficient vector in the degree-d slice. Every word of the
  /// chain must be a basis word of that slice.
  std::vector<long long> to_vector(int degree, const Chain& c) const;
  std::vector<std::pair<int, long long>> to_vector_sparse(int degree,
                                                          const Chain& c) const;
  Chain from_vector(int degree, const std::vector<long long>& v) const;

  /// d o d == 0 on every built slice (exact integer check).
  bool boundary_squares_to_zero() const;

  /// Sparse triplet dump (row col value), one line per entry.
  void dump_boundary(int degree, std::ostream& os) const;

private:
  const GradedCoalgebra* C_;
  MultiDegree I_;
  std::optional<int> max_degree_;
  std::map<int, std::vector<Word>> slices_;
  std::unordered_map<Word, int, WordHash> index_;
  std::map<int, SparseIntMat> boundaries_;
  std::vector<Word> empty_;
};

/// Chain algebra of K: cobar construction on the exterior face coalgebra
/// with unit degrees. Letters are nonempty faces; a word of n letters with
/// multidegree I sits in degree |I| - n.
ChainComplex tk_complex(const SimplicialComplex& K, const MultiDegree& I,
                        std::optional<int> max_degree = std::nullopt);

/// Tensor-algebra analogue on tuples: cobar construction on the tuple
/// coalgebra truncated at I. The square-free words form a subcomplex equal
/// to tk_complex letter-for-letter.
ChainComplex pk_complex(const SimplicialComplex& K, const MultiDegree& I,
                        std::optional<int> max_degree = std::nullopt);

/// Doubling operation on chains of the face-letter complex. In every word,
/// locates the letter holding the k-th occurrence of color j (minimal n with
/// exactly k of the first n letters containing j) and replaces it by the
/// signed sum over ordered splits (t1, t2) of letter - {j}, empty parts
/// included:
///   sum (-1)^{epsilon(t1, t2)} ( .. | {j}+t1 | {j}+t2 | .. ).
/// Preserves topological degree; raises the multidegree by e_j; commutes
/// with the differential.
Chain mu_chain(const GradedCoalgebra& C, int j, int k, const Chain& c);

/// Squaring operation on chains of the tuple-letter complex: adds e_j to the
/// letter holding the k-th occurrence of color j, with the sign
///   (-1)^{deg(prefix) + eps(j, tau) + n}
/// where prefix is the part left of that letter, tau = letter - e_j, eps
/// counts entries of tau smaller than j with multiplicity, and n is the word
/// length.
Chain nu_chain(const GradedCoalgebra& C, int j, int k, const Chain& c);

/// Projection keeping the words whose k-th and (k+1)-st occurrences of color
/// j lie in different letters (the separated part).
Chain separated_part(const GradedCoalgebra& C, int j, int k, const Chain& c);

/// Embeds a face-letter chain into a tuple-letter complex (square-free
/// letters), by matching letter multidegrees.
Chain embed_squarefree(const GradedCoalgebra& from, const GradedCoalgebra& to,
                       const Chain& c);

}  // namespace loophom
