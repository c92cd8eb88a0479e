#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dskit/balanced.hpp"
#include "dskit/complex.hpp"
#include "dskit/enumeration.hpp"
#include "dskit/homology.hpp"
#include "dskit/relations.hpp"
#include "dskit/report.hpp"

namespace dskit::io {

using nlohmann::json;

// .cplx: one facet per line as space-separated positive ids; lines starting
// with '#' and blank lines are skipped; no facets means {empty face}.

Complex read_cplx(std::istream& in, std::size_t max_faces = default_max_faces());
Complex read_cplx_string(const std::string& text, std::size_t max_faces = default_max_faces());
/// Facets in lexicographic order, one per line.
void write_cplx(std::ostream& out, const Complex& complex);
std::string write_cplx_string(const Complex& complex);

// .colors: "vertex color" per line, '#' comments.
ColorMap read_colors(std::istream& in);
void write_colors(std::ostream& out, const ColorMap& colors);

/// Integers go out as decimal strings.
json to_json(const Integer& value);
json to_json(const std::vector<Integer>& values);
Integer integer_from_json(const json& value);

json report_to_json(const RelationReport& report);
/// Inverse of report_to_json; ParseError (line 0) on schema mismatch.
RelationReport report_from_json(const json& value);

/// {"f": [...], "h": [...], "m": [{"face": [...], "m": "..."}], "chi": "...", "chi_reduced": "..."}
json enumeration_to_json(const MultiplicityTable& table);

json classification_to_json(const Complex& complex, const Classification& c);

json betti_to_json(const BettiTable& betti, FieldSpec field);

/// {"homology_manifold": bool, "witness": [...] or null, "boundary_faces": [[...], ...]}
json manifold_to_json(const Complex& complex, const ManifoldVerdict& verdict, FieldSpec field);

/// [{"b": [...], "f": "...", "h": "..."}, ...]
json flag_to_json(const FlagVector& f, const FlagVector& h);

json face_to_json(const Complex& complex, const Face& face);

}  // namespace dskit::io
