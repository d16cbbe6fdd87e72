#pragma once

#include <string>

#include <json.hpp>

#include "newtonpoly/ore.hpp"
#include "newtonpoly/polygon.hpp"
#include "newtonpoly/theorems.hpp"

namespace newtonpoly {

using Json = nlohmann::ordered_json;

/// {"prime", "origin": [0, y0], "vertices": [[x, y], ...],
///  "edges": [{"slope": {"num", "den"}, "length", "lattice_points"}, ...]}
Json to_json(const NewtonPolygon& np);
/// Inverse of to_json for polygons; throws Error(InvalidArgument) on a
/// malformed document.
NewtonPolygon polygon_from_json(const Json& j);

Json to_json(const FactorConstraints& fc);
Json to_json(const TheoremCertificate& cert);
Json to_json(const PurityClass& cls);
Json to_json(const ComparisonReport& report);
Json to_json(const LemmaCheck& check);
Json to_json(const DegreeProfile& profile);
Json to_json(const ResidualDatum& datum);
Json to_json(const SplittingShape& shape);
Json to_json(const MonogenityVerdict& verdict);
Json to_json(const SchurSpec& spec);

/// Coefficient list of an F_q polynomial, lowest degree first; each entry
/// is the coefficient list of its F_p[t] representative.
Json to_json(const FqPoly& a);

/// SVG drawing of a polygon document (as produced by to_json). Pure
/// function of its input.
std::string render_svg(const Json& polygon);
/// Plain-text rendering: vertex list, edge table and a character plot.
std::string render_ascii(const Json& polygon);

}  // namespace newtonpoly
