#include "loophom/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

namespace loophom {

std::vector<int> face_vertices(Face f) {
  std::vector<int> out;
  while (f) {
    int b = __builtin_ctzll(f);
    out.push_back(b + 1);
    f &= f - 1;
  }
  return out;
}

int epsilon_sign(Face a, Face b) {
  // pairs (i, j), i in a, j in b, i > j: for each i, count bits of b below i
  int count = 0;
  Face x = a;
  while (x) {
    int i = __builtin_ctzll(x);
    count += __builtin_popcountll(b & ((Face{1} << i) - 1));
    x &= x - 1;
  }
  return count;
}

MultiDegree MultiDegree::unit(int m, int j) {
  std::vector<int> e(m, 0);
  e[j - 1] = 1;
  return MultiDegree(std::move(e));
}

MultiDegree MultiDegree::characteristic(int m, Face f) {
  std::vector<int> e(m, 0);
  for (int v : face_vertices(f)) e[v - 1] = 1;
  return MultiDegree(std::move(e));
}

Face MultiDegree::support() const {
  Face f = 0;
  for (int j = 0; j < size(); ++j)
    if (e_[j] != 0) f |= Face{1} << j;
  return f;
}

bool MultiDegree::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0; });
}

bool MultiDegree::is_squarefree() const {
  return std::all_of(e_.begin(), e_.end(), [](int x) { return x == 0 || x == 1; });
}

bool MultiDegree::leq(const MultiDegree& o) const {
  if (size() != o.size()) return false;
  for (int j = 0; j < size(); ++j)
    if (e_[j] > o.e_[j]) return false;
  return true;
}

MultiDegree MultiDegree::operator+(const MultiDegree& o) const {
  std::vector<int> e(e_);
  for (int j = 0; j < o.size(); ++j) e[j] += o.e_[j];
  return MultiDegree(std::move(e));
}

MultiDegree MultiDegree::operator-(const MultiDegree& o) const {
  std::vector<int> e(e_);
  for (int j = 0; j < o.size(); ++j) e[j] -= o.e_[j];
  return MultiDegree(std::move(e));
}

std::string MultiDegree::to_string() const {
  std::string s;
  for (int j = 0; j < size(); ++j) {
    if (j) s += ',';
    s += std::to_string(e_[j]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const MultiDegree& I) {
  return os << '(' << I.to_string() << ')';
}

long long epsilon_tuples(const MultiDegree& a, const MultiDegree& b) {
  long long count = 0;
  for (int i = 1; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    long long below = 0;
    for (int j = 0; j < i; ++j) below += b[j];
    count += static_cast<long long>(a[i]) * below;
  }
  return count;
}

static void enum_totals(int m, int pos, int remaining, std::vector<int>& cur,
                        std::vector<MultiDegree>& out) {
  if (pos == m - 1) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    cur[pos] = v;
    enum_totals(m, pos + 1, remaining - v, cur, out);
  }
}

std::vector<MultiDegree> multidegrees_of_total(int m, int total) {
  std::vector<MultiDegree> out;
  if (m == 0) {
    if (total == 0) out.emplace_back(std::vector<int>{});
    return out;
  }
  std::vector<int> cur(m, 0);
  enum_totals(m, 0, total, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<MultiDegree> multidegrees_up_to(int m, int bound) {
  std::vector<MultiDegree> out;
  for (int t = 0; t <= bound; ++t) {
    auto layer = multidegrees_of_total(m, t);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

// ---------------------------------------------------------------------------

SimplicialComplex::SimplicialComplex(int m, std::vector<Face> faces)
    : m_(m), faces_(std::move(faces)) {}

static void sort_faces(std::vector<Face>& faces) {
  std::sort(faces.begin(), faces.end(), [](Face a, Face b) {
    int pa = face_size(a), pb = face_size(b);
    return pa != pb ? pa < pb : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
}

SimplicialComplex SimplicialComplex::from_facets(int m,
                                                 const std::vector<Face>& facets) {
  if (m < 0 || m > 64) throw std::invalid_argument("vertex count out of range");
  Face universe = m == 64 ? ~Face{0} : (Face{1} << m) - 1;
  Face covered = 0;
  for (Face f : facets) {
    if (f & ~universe)
      throw std::invalid_argument("facet contains a vertex outside [m]");
    covered |= f;
  }
  if (covered != universe) {
    Face missing = universe & ~covered;
    throw std::invalid_argument("vertex " +
                                std::to_string(__builtin_ctzll(missing) + 1) +
                                " does not appear in any facet");
  }
  // downward closure
  std::set<Face> closure;
  closure.insert(0);
  for (Face f : facets) {
    // all subsets of f
    Face sub = f;
    while (true) {
      closure.insert(sub);
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  std::vector<Face> faces(closure.begin(), closure.end());
  sort_faces(faces);
  return SimplicialComplex(m, std::move(faces));
}

SimplicialComplex SimplicialComplex::from_faces(int m, std::vector<Face> faces) {
  sort_faces(faces);
  // validate downward closure and coverage by delegating to from_facets
  std::vector<Face> max;
  for (Face f : faces) {
    bool maximal = true;
    for (Face g : faces)
      if (g != f && (f & g) == f) { maximal = false; break; }
    if (maximal && f != 0) max.push_back(f);
  }
  if (faces.empty() || faces[0] != 0)
    throw std::invalid_argument("face family must contain the empty set");
  auto K = from_facets(m, max.empty() ? std::vector<Face>{0} : max);
  if (K.faces_ != faces)
    throw std::invalid_argument("face family is not downward closed");
  return K;
}

bool SimplicialComplex::contains(Face f) const {
  return std::binary_search(faces_.begin(), faces_.end(), f, [](Face a, Face b) {
    int pa = face_size(a), pb = face_size(b);
    return pa != pb ? pa < pb : a < b;
  });
}

std::vector<Face> SimplicialComplex::facets() const {
  std::vector<Face> out;
  for (Face f : faces_) {
    if (f == 0 && faces_.size() > 1) continue;
    bool maximal = true;
    for (Face g : faces_)
      if (g != f && (f & g) == f) { maximal = false; break; }
    if (maximal) out.push_back(f);
  }
  return out;
}

int SimplicialComplex::dim() const {
  return face_size(faces_.back()) - 1;
}

std::vector<Face> missing_faces(const SimplicialComplex& K) {
  // tau is missing iff tau not in K and all maximal proper subsets are in K
  std::vector<Face> out;
  int m = K.vertex_count();
  // candidates: unions sigma + {v} for sigma in K, v not in sigma,
  // plus nothing else (a missing face minus one vertex is a face)
  std::set<Face> seen;
  for (Face sigma : K.faces()) {
    for (int v = 0; v < m; ++v) {
      Face tau = sigma | (Face{1} << v);
      if (tau == sigma || K.contains(tau) || seen.count(tau)) continue;
      seen.insert(tau);
      bool minimal = true;
      Face x = tau;
      while (x && minimal) {
        int b = __builtin_ctzll(x);
        if (!K.contains(tau & ~(Face{1} << b))) minimal = false;
        x &= x - 1;
      }
      if (minimal) out.push_back(tau);
    }
  }
  sort_faces(out);
  return out;
}

bool is_flag(const SimplicialComplex& K) {
  for (Face tau : missing_faces(K))
    if (face_size(tau) != 2) return false;
  return true;
}

bool is_shifted_in_given_order(const SimplicialComplex& K) {
  for (Face sigma : K.nonempty_faces()) {
    Face x = sigma;
    while (x) {
      int j = __builtin_ctzll(x);
      x &= x - 1;
      for (int i = 0; i < j; ++i) {
        if (sigma & (Face{1} << i)) continue;
        Face moved = (sigma & ~(Face{1} << j)) | (Face{1} << i);
        if (!K.contains(moved)) return false;
      }
    }
  }
  return true;
}

static SimplicialComplex relabel(const SimplicialComplex& K,
                                 const std::vector<int>& perm) {
  // perm[old 0-based] = new 0-based
  std::vector<Face> faces;
  faces.reserve(K.face_count());
  for (Face f : K.faces()) {
    Face g = 0;
    Face x = f;
    while (x) {
      int b = __builtin_ctzll(x);
      g |= Face{1} << perm[b];
      x &= x - 1;
    }
    faces.push_back(g);
  }
  sort_faces(faces);
  return SimplicialComplex::from_faces(K.vertex_count(), std::move(faces));
}

bool is_shifted(const SimplicialComplex& K) {
  if (is_shifted_in_given_order(K)) return true;
  int m = K.vertex_count();
  if (m > 10) return false;
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  while (std::next_permutation(perm.begin(), perm.end())) {
    if (is_shifted_in_given_order(relabel(K, perm))) return true;
  }
  return false;
}

SimplicialComplex compose(const SimplicialComplex& K,
                          const std::vector<SimplicialComplex>& blocks) {
  int s = K.vertex_count();
  if (static_cast<int>(blocks.size()) != s)
    throw std::invalid_argument("compose: block count must equal vertex count of K");
  std::vector<int> offset(s + 1, 0);
  for (int i = 0; i < s; ++i) offset[i + 1] = offset[i] + blocks[i].vertex_count();
  int m = offset[s];
  if (m > 64) throw std::invalid_argument("compose: resulting vertex count exceeds 64");

  std::set<Face> faces;
  faces.insert(0);
  for (Face sigma : K.nonempty_faces()) {
    // product over i in sigma of nonempty faces of blocks[i]
    std::vector<int> idx = face_vertices(sigma);  // 1-indexed block numbers
    std::vector<Face> partial{0};
    for (int b : idx) {
      const auto& L = blocks[b - 1];
      std::vector<Face> next;
      next.reserve(partial.size() * L.face_count());
      for (Face base : partial)
        for (Face g : L.nonempty_faces())
          next.push_back(base | (g << offset[b - 1]));
      partial = std::move(next);
    }
    faces.insert(partial.begin(), partial.end());
  }
  return SimplicialComplex::from_faces(m, std::vector<Face>(faces.begin(), faces.end()));
}

SimplicialComplex full_simplex(int m) {
  Face top = m == 64 ? ~Face{0} : (Face{1} << m) - 1;
  return SimplicialComplex::from_facets(m, {top});
}

SimplicialComplex vertices_only(int m) {
  std::vector<Face> facets;
  for (int v = 0; v < m; ++v) facets.push_back(Face{1} << v);
  return SimplicialComplex::from_facets(m, facets);
}

SimplicialComplex skeleton(const SimplicialComplex& K, int i) {
  if (i < 0 || i > K.dim())
    throw std::invalid_argument("skeleton: index out of range");
  std::vector<Face> faces;
  for (Face f : K.faces())
    if (face_size(f) <= i + 1) faces.push_back(f);
  return SimplicialComplex::from_faces(K.vertex_count(), std::move(faces));
}

SimplicialComplex skeleton_of_simplex(int m, int i) {
  return skeleton(full_simplex(m), i);
}

SimplicialComplex full_subcomplex(const SimplicialComplex& K, Face V) {
  std::vector<int> verts = face_vertices(V);
  std::vector<int> newindex(64, -1);
  for (std::size_t i = 0; i < verts.size(); ++i) newindex[verts[i] - 1] = static_cast<int>(i);
  std::vector<Face> faces;
  for (Face f : K.faces()) {
    if (f & ~V) continue;
    Face g = 0;
    Face x = f;
    while (x) {
      int b = __builtin_ctzll(x);
      g |= Face{1} << newindex[b];
      x &= x - 1;
    }
    faces.push_back(g);
  }
  return SimplicialComplex::from_faces(static_cast<int>(verts.size()), std::move(faces));
}

SimplicialComplex sigma_suspension(const SimplicialComplex& K) {
  int m = K.vertex_count();
  if (m + 1 > 64) throw std::invalid_argument("sigma_suspension: too many vertices");
  Face apex = Face{1} << m;
  std::set<Face> faces;
  // Delta[m] part
  Face top = (Face{1} << m) - 1;
  Face sub = top;
  while (true) {
    faces.insert(sub);
    if (sub == 0) break;
    sub = (sub - 1) & top;
  }
  for (Face f : K.faces()) faces.insert(f | apex);
  return SimplicialComplex::from_faces(m + 1,
                                       std::vector<Face>(faces.begin(), faces.end()));
}

SimplicialComplex flagification(const SimplicialComplex& K) {
  int m = K.vertex_count();
  // grow cliques of the 1-skeleton
  std::vector<Face> faces{0};
  std::vector<Face> frontier;
  for (int v = 0; v < m; ++v) frontier.push_back(Face{1} << v);
  while (!frontier.empty()) {
    faces.insert(faces.end(), frontier.begin(), frontier.end());
    std::set<Face> next;
    for (Face c : frontier) {
      int top = 63 - __builtin_clzll(c);
      for (int v = top + 1; v < m; ++v) {
        Face vb = Face{1} << v;
        bool ok = true;
        Face x = c;
        while (x && ok) {
          int b = __builtin_ctzll(x);
          if (!K.contains((Face{1} << b) | vb)) ok = false;
          x &= x - 1;
        }
        if (ok) next.insert(c | vb);
      }
    }
    frontier.assign(next.begin(), next.end());
  }
  return SimplicialComplex::from_faces(m, std::move(faces));
}

SimplicialComplex polygon(int m) {
  if (m < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
  std::vector<Face> facets;
  for (int v = 1; v <= m; ++v) {
    int w = v == m ? 1 : v + 1;
    facets.push_back(face_of({v, w}));
  }
  return SimplicialComplex::from_facets(m, facets);
}

SimplicialComplex octahedron(int n) {
  std::vector<SimplicialComplex> blocks(n, vertices_only(2));
  // join of n copies of V[2] = compose(Delta[n], V[2], ..., V[2]), with
  // antipodal pairs (2i-1, 2i); relabel so that vertex i pairs with n+i.
  auto J = compose(full_simplex(n), blocks);
  std::vector<int> perm(2 * n);
  for (int i = 0; i < n; ++i) {
    perm[2 * i] = i;
    perm[2 * i + 1] = n + i;
  }
  std::vector<Face> faces;
  for (Face f : J.faces()) {
    Face g = 0;
    Face x = f;
    while (x) {
      int b = __builtin_ctzll(x);
      g |= Face{1} << perm[b];
      x &= x - 1;
    }
    faces.push_back(g);
  }
  return SimplicialComplex::from_faces(2 * n, std::move(faces));
}

}  // namespace loophom
