#include "loophom/io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace loophom {

using nlohmann::json;

SimplicialComplex complex_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("m") || !j.contains("facets"))
    throw std::invalid_argument("complex JSON needs \"m\" and \"facets\"");
  int m = j.at("m").get<int>();
  std::vector<Face> facets;
  for (const auto& f : j.at("facets")) {
    Face face = 0;
    for (const auto& v : f) {
      int vi = v.get<int>();
      if (vi < 1 || vi > m)
        throw std::invalid_argument("facet vertex out of range");
      face |= Face{1} << (vi - 1);
    }
    facets.push_back(face);
  }
  return SimplicialComplex::from_facets(m, facets);
}

SimplicialComplex complex_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return complex_from_json(ss.str());
}

std::string complex_to_json(const SimplicialComplex& K) {
  json j;
  j["m"] = K.vertex_count();
  json facets = json::array();
  for (Face f : K.facets()) facets.push_back(face_vertices(f));
  j["facets"] = facets;
  json missing = json::array();
  for (Face f : missing_faces(K)) missing.push_back(face_vertices(f));
  j["missing_faces"] = missing;
  return j.dump();
}

VertexAlgebra vertex_algebra_from_spec(const std::string& spec, int cutoff) {
  auto paren = spec.find('(');
  if (paren != std::string::npos && spec.back() == ')') {
    std::string kind = spec.substr(0, paren);
    int arg = std::stoi(spec.substr(paren + 1, spec.size() - paren - 2));
    if (kind == "poly") return poly_vertex_algebra(arg, cutoff);
    if (kind == "exterior") return exterior_vertex_algebra(arg);
    throw std::invalid_argument("unknown vertex algebra shorthand: " + spec);
  }
  json j = json::parse(spec);
  VertexAlgebra A;
  for (const auto& b : j.at("basis"))
    A.basis.push_back({b.at("name").get<std::string>(), b.at("degree").get<int>()});
  if (j.contains("products")) {
    for (const auto& p : j.at("products")) {
      std::vector<std::pair<int, long long>> terms;
      for (const auto& t : p.at("terms"))
        terms.emplace_back(t.at("index").get<int>(), t.at("coeff").get<long long>());
      A.products[{p.at("left").get<int>(), p.at("right").get<int>()}] =
          std::move(terms);
    }
  }
  A.validate(cutoff);
  return A;
}

std::string presentation_to_json(const AlgebraPresentation& P) {
  json j;
  json gens = json::array();
  for (const auto& g : P.generators) {
    json gj;
    gj["name"] = g.name;
    gj["degree"] = g.degree;
    if (g.mdeg) gj["multidegree"] = g.mdeg->entries();
    gens.push_back(gj);
  }
  j["generators"] = gens;
  json rels = json::array();
  for (const auto& r : P.relations) {
    json rel = json::array();
    for (const auto& [w, c] : r) {
      json t;
      t["coeff"] = c;
      t["word"] = w;
      rel.push_back(t);
    }
    rels.push_back(rel);
  }
  j["relations"] = rels;
  return j.dump();
}

AlgebraPresentation presentation_from_json(const std::string& text) {
  json j = json::parse(text);
  AlgebraPresentation P;
  for (const auto& g : j.at("generators")) {
    AlgebraPresentation::Generator ng;
    ng.name = g.at("name").get<std::string>();
    ng.degree = g.at("degree").get<int>();
    if (g.contains("multidegree"))
      ng.mdeg = MultiDegree(g.at("multidegree").get<std::vector<int>>());
    P.generators.push_back(std::move(ng));
  }
  for (const auto& r : j.at("relations")) {
    AlgebraPresentation::Relation rel;
    for (const auto& t : r)
      rel.emplace_back(t.at("word").get<std::vector<int>>(),
                       t.at("coeff").get<long long>());
    P.relations.push_back(std::move(rel));
  }
  P.validate();
  return P;
}

void write_betti_tsv(const BettiTable& table, std::ostream& os) {
  os << "I\tk\trank\ttorsion\n";
  for (const auto& [key, g] : table.entries) {
    os << key.first.to_string() << '\t' << key.second << '\t' << g.rank << '\t';
    for (std::size_t i = 0; i < g.torsion.size(); ++i)
      os << (i ? ";" : "") << g.torsion[i];
    os << '\n';
  }
}

void write_betti_json(const BettiTable& table, std::ostream& os) {
  json rows = json::array();
  for (const auto& [key, g] : table.entries) {
    json r;
    r["I"] = key.first.entries();
    r["k"] = key.second;
    r["rank"] = g.rank;
    json tors = json::array();
    for (const auto& t : g.torsion) tors.push_back(t.str());
    r["torsion"] = tors;
    rows.push_back(r);
  }
  os << rows.dump() << '\n';
}

void write_cotor_tsv(const CotorReport& report, std::ostream& os) {
  os << "n\tI\tdim_tor\tdim_cobar\tmatch\n";
  for (const auto& r : report.rows)
    os << r.n << '\t' << r.I.to_string() << '\t' << r.dim_tor << '\t'
       << r.dim_cobar << '\t' << (r.match ? 1 : 0) << '\n';
}

void write_dims_tsv(const GradedDims& dims, std::ostream& os) {
  os << "degree\tdim\n";
  for (std::size_t d = 0; d < dims.dims.size(); ++d)
    os << d << '\t' << dims.dims[d] << '\n';
}

void write_dims_json(const GradedDims& dims, std::ostream& os) {
  os << json(dims.dims).dump() << '\n';
}

namespace {
std::string rational_str(const Rational& r) {
  std::ostringstream ss;
  ss << r;
  return ss.str();
}
}  // namespace

void write_series_tsv(const TruncatedSeries& s, std::ostream& os) {
  os << "power\tcoefficient\n";
  for (int i = 0; i <= s.order(); ++i)
    os << i << '\t' << rational_str(s[i]) << '\n';
}

void write_series_json(const TruncatedSeries& s, std::ostream& os) {
  json arr = json::array();
  for (int i = 0; i <= s.order(); ++i) arr.push_back(rational_str(s[i]));
  os << arr.dump() << '\n';
}

void write_noequal_tsv(const NoEqualComparison& cmp, std::ostream& os) {
  os << "degree\tenumerated\tsnf_rank\tmatch\n";
  for (const auto& r : cmp.rows)
    os << r.degree << '\t' << r.enumerated << '\t' << r.snf_rank << '\t'
       << (r.match ? 1 : 0) << '\n';
}

void write_arrangement_json(const ArrangementDescription& arr, std::ostream& os) {
  json j;
  switch (arr.which) {
    case ArrangementDescription::Case::kUnitMultidegree:
      j["case"] = "unit";
      break;
    case ArrangementDescription::Case::kSubcomplex:
      j["case"] = "subcomplex";
      break;
    case ArrangementDescription::Case::kChambers:
      j["case"] = "chambers";
      break;
  }
  j["ambient_dim"] = arr.ambient_dim;
  j["diagonal_blocks"] = arr.diagonal_blocks;
  json chambers = json::array();
  for (const auto& c : arr.chambers) {
    json cj;
    cj["color"] = c.color;
    cj["coordinates"] = c.coordinates;
    chambers.push_back(cj);
  }
  j["chambers"] = chambers;
  os << j.dump() << '\n';
}

std::string coalgebra_to_json(const GradedCoalgebra& C) {
  json j;
  json basis = json::array();
  for (int i = 0; i < C.dim(); ++i) {
    json b;
    b["label"] = C.element(i).label;
    b["degree"] = C.element(i).degree;
    b["multidegree"] = C.element(i).mdeg.entries();
    basis.push_back(b);
  }
  j["basis"] = basis;
  json cop = json::array();
  for (int i = 0; i < C.dim(); ++i) {
    json terms = json::array();
    for (const auto& t : C.reduced_coproduct(i)) {
      json tj;
      tj["left"] = t.left;
      tj["right"] = t.right;
      tj["coeff"] = t.coeff;
      terms.push_back(tj);
    }
    cop.push_back(terms);
  }
  j["reduced_coproduct"] = cop;
  return j.dump();
}

}  // namespace loophom
