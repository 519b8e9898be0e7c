#include "loophom/cobar.hpp"

#include <algorithm>
#include <stdexcept>

namespace loophom {

int word_degree(const GradedCoalgebra& C, const Word& w) {
  int d = 0;
  for (auto l : w.letters) d += C.element(l).degree - 1;
  return d;
}

MultiDegree word_multidegree(const GradedCoalgebra& C, const Word& w) {
  MultiDegree I = MultiDegree::zero(C.colors());
  for (auto l : w.letters) I = I + C.element(l).mdeg;
  return I;
}

std::string word_to_string(const GradedCoalgebra& C, const Word& w) {
  std::string s = "(";
  for (int i = 0; i < w.length(); ++i) {
    if (i) s += '|';
    s += C.element(w.letters[i]).label;
  }
  return s + ")";
}

void Chain::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

void Chain::add(const Word& w, long long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Chain& Chain::operator+=(const Chain& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

Chain Chain::operator*(long long c) const {
  Chain out;
  if (c == 0) return out;
  for (const auto& [w, x] : terms_) out.terms_[w] = x * c;
  return out;
}

int Chain::degree(const GradedCoalgebra& C) const {
  if (terms_.empty()) throw std::logic_error("degree of zero chain");
  int d = word_degree(C, terms_.begin()->first);
  for (const auto& [w, c] : terms_)
    if (word_degree(C, w) != d)
      throw std::logic_error("chain is not degree-homogeneous");
  return d;
}

MultiDegree Chain::multidegree(const GradedCoalgebra& C) const {
  if (terms_.empty()) throw std::logic_error("multidegree of zero chain");
  MultiDegree I = word_multidegree(C, terms_.begin()->first);
  for (const auto& [w, c] : terms_)
    if (word_multidegree(C, w) != I)
      throw std::logic_error("chain is not multidegree-homogeneous");
  return I;
}

std::string Chain::to_string(const GradedCoalgebra& C) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += c >= 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    long long a = c < 0 ? -c : c;
    if (a != 1) s += std::to_string(a) + "*";
    s += word_to_string(C, w);
  }
  return s;
}

Chain differential(const GradedCoalgebra& C, const Word& w) {
  Chain out;
  int prefix = 0;  // sum of cobar degrees of letters left of the position
  for (int r = 0; r < w.length(); ++r) {
    int letter = w.letters[r];
    for (const auto& t : C.reduced_coproduct(letter)) {
      long long sign = ((prefix + C.element(t.left).degree) & 1) ? -1 : 1;
      Word nw;
      nw.letters.reserve(w.length() + 1);
      nw.letters.insert(nw.letters.end(), w.letters.begin(), w.letters.begin() + r);
      nw.letters.push_back(t.left);
      nw.letters.push_back(t.right);
      nw.letters.insert(nw.letters.end(), w.letters.begin() + r + 1, w.letters.end());
      out.add(nw, sign * t.coeff);
    }
    prefix += C.element(letter).degree - 1;
  }
  return out;
}

Chain differential(const GradedCoalgebra& C, const Chain& c) {
  Chain out;
  for (const auto& [w, coeff] : c.terms()) out += differential(C, w) * coeff;
  return out;
}

Chain concat_product(const Chain& a, const Chain& b) {
  Chain out;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      Word w;
      w.letters.reserve(wa.letters.size() + wb.letters.size());
      w.letters.insert(w.letters.end(), wa.letters.begin(), wa.letters.end());
      w.letters.insert(w.letters.end(), wb.letters.begin(), wb.letters.end());
      out.add(w, ca * cb);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

ChainComplex::ChainComplex(const GradedCoalgebra& C, MultiDegree I,
                           std::optional<int> max_degree)
    : C_(&C), I_(std::move(I)), max_degree_(max_degree) {
  if (I_.size() != C.colors())
    throw std::invalid_argument("multidegree size must match coalgebra colors");

  // enumerate all words of non-counit letters with multidegree sum I,
  // pruned by the degree cap (letter cobar degrees are >= 0)
  std::vector<std::int32_t> cur;
  MultiDegree rem = I_;
  auto rec = [&](auto&& self, int degree_so_far) -> void {
    if (rem.is_zero()) {
      if (!cur.empty()) slices_[degree_so_far].push_back(Word{cur});
      return;
    }
    for (int l = 0; l < C.dim(); ++l) {
      if (l == C.counit_index()) continue;
      const auto& e = C.element(l);
      if (!e.mdeg.leq(rem)) continue;
      int nd = degree_so_far + e.degree - 1;
      if (max_degree_ && nd > *max_degree_ + 0) continue;
      cur.push_back(l);
      rem = rem - e.mdeg;
      self(self, nd);
      rem = rem + e.mdeg;
      cur.pop_back();
    }
  };
  if (I_.is_zero()) {
    // the empty multidegree carries only the empty word; we keep no slices
  } else {
    rec(rec, 0);
  }

  for (auto& [d, words] : slices_) {
    std::sort(words.begin(), words.end());
    for (std::size_t i = 0; i < words.size(); ++i)
      index_[words[i]] = static_cast<int>(i);
  }

  // boundary matrices
  for (auto& [d, words] : slices_) {
    SparseIntMat M;
    M.cols = static_cast<int>(words.size());
    M.rows = dim(d - 1);
    M.columns.resize(M.cols);
    for (int cidx = 0; cidx < M.cols; ++cidx) {
      Chain dc = loophom::differential(*C_, words[cidx]);
      M.columns[cidx] = to_vector_sparse(d - 1, dc);
    }
    boundaries_[d] = std::move(M);
  }
}

int ChainComplex::min_degree() const {
  return slices_.empty() ? 0 : slices_.begin()->first;
}

int ChainComplex::max_degree() const {
  return slices_.empty() ? -1 : slices_.rbegin()->first;
}

int ChainComplex::dim(int degree) const {
  auto it = slices_.find(degree);
  return it == slices_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<Word>& ChainComplex::basis(int degree) const {
  auto it = slices_.find(degree);
  return it == slices_.end() ? empty_ : it->second;
}

int ChainComplex::index_of(const Word& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

std::vector<std::pair<int, long long>> ChainComplex::to_vector_sparse(
    int degree, const Chain& c) const {
  std::vector<std::pair<int, long long>> out;
  for (const auto& [w, coeff] : c.terms()) {
    if (word_degree(*C_, w) != degree)
      throw std::logic_error("chain word of unexpected degree");
    int i = index_of(w);
    if (i < 0) throw std::logic_error("chain contains a word outside the complex");
    out.emplace_back(i, coeff);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long long> ChainComplex::to_vector(int degree, const Chain& c) const {
  std::vector<long long> v(dim(degree), 0);
  for (const auto& [i, coeff] : to_vector_sparse(degree, c)) v[i] = coeff;
  return v;
}

Chain ChainComplex::from_vector(int degree, const std::vector<long long>& v) const {
  const auto& words = basis(degree);
  Chain out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.add(words[i], v[i]);
  return out;
}

const SparseIntMat& ChainComplex::boundary(int degree) const {
  static const SparseIntMat kEmpty;
  auto it = boundaries_.find(degree);
  return it == boundaries_.end() ? kEmpty : it->second;
}

bool ChainComplex::boundary_squares_to_zero() const {
  for (const auto& [d, M] : boundaries_) {
    const SparseIntMat& N = boundary(d - 1);  // C_{d-1} -> C_{d-2}
    if (N.cols == 0) continue;
    for (int c = 0; c < M.cols; ++c) {
      std::map<int, long long> acc;
      for (const auto& [r, v] : M.columns[c])
        for (const auto& [r2, v2] : N.columns[r]) acc[r2] += v * v2;
      for (const auto& [r2, v2] : acc)
        if (v2 != 0) return false;
    }
  }
  return true;
}

void ChainComplex::dump_boundary(int degree, std::ostream& os) const {
  const SparseIntMat& M = boundary(degree);
  for (int c = 0; c < M.cols; ++c)
    for (const auto& [r, v] : M.columns[c])
      os << r << ' ' << c << ' ' << v << '\n';
}

ChainComplex tk_complex(const SimplicialComplex& K, const MultiDegree& I,
                        std::optional<int> max_degree) {
  return ChainComplex(exterior_sr_coalgebra(K), I, max_degree);
}

ChainComplex pk_complex(const SimplicialComplex& K, const MultiDegree& I,
                        std::optional<int> max_degree) {
  return ChainComplex(tuple_coalgebra(K, I), I, max_degree);
}

// ---------------------------------------------------------------------------

Chain mu_chain(const GradedCoalgebra& C, int j, int k, const Chain& c) {
  Chain out;
  for (const auto& [w, coeff] : c.terms()) {
    // locate the letter with the k-th occurrence of color j; face letters
    // carry 0/1 multidegrees, so this is the k-th letter containing j
    int seen = 0, pos = -1;
    for (int r = 0; r < w.length(); ++r) {
      const auto& e = C.element(w.letters[r]);
      if (e.mdeg[j - 1] > 0) {
        if (e.mdeg[j - 1] != 1 || !e.mdeg.is_squarefree())
          throw std::invalid_argument("mu_chain expects face letters");
        if (++seen == k) { pos = r; break; }
      }
    }
    if (pos < 0)
      throw std::invalid_argument("mu_chain: occurrence index out of range");
    Face sigma = C.element(w.letters[pos]).mdeg.support();
    Face rest = sigma & ~(Face{1} << (j - 1));
    // ordered splits of rest, empty parts included
    Face t1 = rest;
    while (true) {
      Face t2 = rest & ~t1;
      int l1 = C.index_of_mdeg(
          MultiDegree::characteristic(C.colors(), t1 | (Face{1} << (j - 1))));
      int l2 = C.index_of_mdeg(
          MultiDegree::characteristic(C.colors(), t2 | (Face{1} << (j - 1))));
      if (l1 < 0 || l2 < 0) throw std::logic_error("mu_chain: split letter missing");
      Word nw;
      nw.letters.reserve(w.length() + 1);
      nw.letters.insert(nw.letters.end(), w.letters.begin(), w.letters.begin() + pos);
      nw.letters.push_back(l1);
      nw.letters.push_back(l2);
      nw.letters.insert(nw.letters.end(), w.letters.begin() + pos + 1, w.letters.end());
      long long sign = (epsilon_sign(t1, t2) & 1) ? -1 : 1;
      out.add(nw, coeff * sign);
      if (t1 == 0) break;
      t1 = (t1 - 1) & rest;
    }
  }
  return out;
}

Chain nu_chain(const GradedCoalgebra& C, int j, int k, const Chain& c) {
  Chain out;
  for (const auto& [w, coeff] : c.terms()) {
    int seen = 0, pos = -1;
    for (int r = 0; r < w.length(); ++r) {
      seen += C.element(w.letters[r]).mdeg[j - 1];
      if (seen >= k) { pos = r; break; }
    }
    if (pos < 0)
      throw std::invalid_argument("nu_chain: occurrence index out of range");

    int prefix_deg = 0;
    for (int r = 0; r < pos; ++r)
      prefix_deg += C.element(w.letters[r]).degree - 1;
    MultiDegree tau = C.element(w.letters[pos]).mdeg;
    tau[j - 1] -= 1;
    long long eps = 0;  // entries of tau with color < j, with multiplicity
    for (int i = 0; i < j - 1; ++i) eps += tau[i];
    long long n = w.length();

    MultiDegree bumped = C.element(w.letters[pos]).mdeg;
    bumped[j - 1] += 1;
    int nl = C.index_of_mdeg(bumped);
    if (nl < 0) throw std::logic_error("nu_chain: bumped letter outside coalgebra");

    Word nw = w;
    nw.letters[pos] = nl;
    long long sign = ((prefix_deg + eps + n) & 1) ? -1 : 1;
    out.add(nw, coeff * sign);
  }
  return out;
}

Chain separated_part(const GradedCoalgebra& C, int j, int k, const Chain& c) {
  Chain out;
  for (const auto& [w, coeff] : c.terms()) {
    int seen = 0;
    bool separated = true;
    for (int r = 0; r < w.length() && seen <= k; ++r) {
      int cnt = C.element(w.letters[r]).mdeg[j - 1];
      if (cnt == 0) continue;
      if (seen < k && k < seen + cnt) separated = false;  // k and k+1 share a letter
      seen += cnt;
    }
    if (separated) out.add(w, coeff);
  }
  return out;
}

Chain embed_squarefree(const GradedCoalgebra& from, const GradedCoalgebra& to,
                       const Chain& c) {
  Chain out;
  for (const auto& [w, coeff] : c.terms()) {
    Word nw = w;
    for (auto& l : nw.letters) {
      int t = to.index_of_mdeg(from.element(l).mdeg);
      if (t < 0) throw std::logic_error("embed_squarefree: letter missing in target");
      l = t;
    }
    out.add(nw, coeff);
  }
  return out;
}

}  // namespace loophom
