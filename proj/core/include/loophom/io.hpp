#pragma once

#include <iosfwd>
#include <string>

#include "loophom/arrangements.hpp"
#include "loophom/ext_oracle.hpp"
#include "loophom/homology.hpp"
#include "loophom/presentations.hpp"
#include "loophom/series.hpp"
#include "loophom/vertex_algebra.hpp"

namespace loophom {

/// {"m": <int>, "facets": [[1,2],[2,3],...]} with 1-indexed vertices.
SimplicialComplex complex_from_json(const std::string& text);
SimplicialComplex complex_from_json_file(const std::string& path);
/// Canonical output: the input shape plus "missing_faces".
std::string complex_to_json(const SimplicialComplex& K);

/// Shorthands "poly(n)" and "exterior(n)", or a JSON object
/// {"basis": [{"name": ..., "degree": ...}],
///  "products": [{"left": i, "right": j, "terms": [{"index": k, "coeff": c}]}]}.
VertexAlgebra vertex_algebra_from_spec(const std::string& spec, int cutoff);

std::string presentation_to_json(const AlgebraPresentation& P);
AlgebraPresentation presentation_from_json(const std::string& text);

/// BettiTable rows: I (comma-joined), k, rank, torsion (semicolon-joined).
void write_betti_tsv(const BettiTable& table, std::ostream& os);
void write_betti_json(const BettiTable& table, std::ostream& os);

void write_cotor_tsv(const CotorReport& report, std::ostream& os);
void write_dims_tsv(const GradedDims& dims, std::ostream& os);
void write_dims_json(const GradedDims& dims, std::ostream& os);
void write_series_tsv(const TruncatedSeries& s, std::ostream& os);
void write_series_json(const TruncatedSeries& s, std::ostream& os);
void write_noequal_tsv(const NoEqualComparison& cmp, std::ostream& os);
void write_arrangement_json(const ArrangementDescription& arr, std::ostream& os);
/// Coproduct table of a coalgebra, for debugging.
std::string coalgebra_to_json(const GradedCoalgebra& C);

}  // namespace loophom
