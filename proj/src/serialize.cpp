#include "newtonpoly/serialize.hpp"

namespace newtonpoly {

namespace {

Json slope_json(const Slope& s) { return Json{{"num", s.num()}, {"den", s.den()}}; }

Json edges_json(std::span<const Edge> edges) {
  Json out = Json::array();
  for (const Edge& e : edges) {
    out.push_back(Json{{"slope", slope_json(e.slope)}, {"length", e.length}, {"lattice_points", e.lattice_points}});
  }
  return out;
}

Json poly_json(const RationalPoly& f) { return render(f); }

}  // namespace

Json to_json(const NewtonPolygon& np) {
  Json j;
  j["prime"] = np.prime ? Json(*np.prime) : Json(nullptr);
  j["origin"] = Json::array({np.start_x(), np.origin_height()});
  Json vertices = Json::array();
  for (const LatticePoint& v : np.vertices()) vertices.push_back(Json::array({v.x, v.y}));
  j["vertices"] = std::move(vertices);
  j["edges"] = edges_json(np.edges());
  if (!np.merged_translates.empty()) j["merged_translates"] = edges_json(np.merged_translates);
  return j;
}

NewtonPolygon polygon_from_json(const Json& j) {
  try {
    std::vector<LatticePoint> vertices;
    for (const Json& v : j.at("vertices")) vertices.push_back({v.at(0).get<std::int64_t>(), v.at(1).get<std::int64_t>()});
    NewtonPolygon np = NewtonPolygon::from_vertices(std::move(vertices));
    if (j.contains("prime") && !j["prime"].is_null()) np.prime = j["prime"].get<std::uint64_t>();
    return np;
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed polygon document: ") + ex.what());
  }
}

Json to_json(const FactorConstraints& fc) {
  return Json{{"max_factor_count", fc.max_factor_count},
              {"admissible_degree_summands", fc.admissible_degree_summands},
              {"per_edge_degree_divisor", fc.per_edge_degree_divisor},
              {"min_factor_degree", fc.min_factor_degree}};
}

Json to_json(const TheoremCertificate& cert) {
  Json j;
  j["theorem"] = theorem_name(cert.theorem);
  j["verdict"] = verdict_name(cert.verdict);
  Json violations = Json::array();
  for (const Violation& v : cert.violations) violations.push_back(Json{{"name", v.name}, {"detail", v.detail}});
  j["violations"] = std::move(violations);
  if (cert.predicted_polygon) j["predicted_polygon"] = to_json(*cert.predicted_polygon);
  if (cert.factor_bound) j["factor_bound"] = to_json(*cert.factor_bound);
  Json params = Json::object();
  const CertificateParameters& p = cert.parameters;
  if (p.u) params["u"] = *p.u;
  if (p.beta) params["beta"] = *p.beta;
  if (p.branch) params["branch"] = branch_name(*p.branch);
  if (p.n) params["n"] = *p.n;
  if (p.r) params["r"] = *p.r;
  if (p.failing_index) params["failing_index"] = *p.failing_index;
  if (p.eventually_stable) params["eventually_stable"] = *p.eventually_stable;
  j["parameters"] = std::move(params);
  if (!cert.notes.empty()) j["notes"] = cert.notes;
  return j;
}

Json to_json(const PurityClass& cls) {
  return Json{{"kind", purity_kind_name(cls.kind)}, {"r", cls.r}, {"prime", cls.prime}};
}

Json to_json(const LemmaCheck& check) {
  return Json{{"name", check.name}, {"holds", check.holds}, {"detail", check.detail}};
}

Json to_json(const ComparisonReport& report) {
  Json j;
  j["result"] = report.match ? "Match" : "Mismatch";
  j["n"] = report.n;
  j["predicted"] = to_json(report.predicted);
  j["oracle"] = to_json(report.oracle);
  if (report.first_difference) j["first_difference_index"] = *report.first_difference;
  if (report.last_common_vertex) {
    j["last_common_vertex"] = Json::array({report.last_common_vertex->x, report.last_common_vertex->y});
  }
  j["certificate"] = to_json(report.certificate);
  Json lemmas = Json::array();
  for (const LemmaCheck& c : report.lemma_checks) lemmas.push_back(to_json(c));
  j["lemma_checks"] = std::move(lemmas);
  return j;
}

Json to_json(const DegreeProfile& profile) {
  Json out = Json::array();
  for (const auto& [h, count] : profile.entries) out.push_back(Json{{"degree", h}, {"count", count}});
  return out;
}

Json to_json(const FqPoly& a) {
  Json out = Json::array();
  for (const FpPoly& c : a.coefficients()) {
    out.push_back(Json(std::vector<std::uint64_t>(c.coefficients().begin(), c.coefficients().end())));
  }
  return out;
}

Json to_json(const ResidualDatum& datum) {
  return Json{{"edge_index", datum.edge_index},
              {"slope", slope_json(datum.slope)},
              {"t", datum.t},
              {"residual_poly", to_json(datum.residual_poly)},
              {"squarefree", datum.squarefree},
              {"degree_profile", to_json(datum.degree_profile)},
              {"factor_degrees", datum.factor_degrees}};
}

Json to_json(const SplittingShape& shape) {
  Json j;
  j["prime"] = shape.prime;
  j["p_regular"] = shape.p_regular;
  Json factors = Json::array();
  for (const auto& [phi, exponent] : shape.factors_mod_p) factors.push_back(Json{{"phi", poly_json(phi)}, {"exponent", exponent}});
  j["factors_mod_p"] = std::move(factors);
  Json entries = Json::array();
  for (const SplittingEntry& e : shape.entries) {
    entries.push_back(Json{{"ramification", e.ramification}, {"residual_degree", e.residual_degree}, {"count", e.count}});
  }
  j["entries"] = std::move(entries);
  if (shape.p_regular) {
    j["degree_sum"] = shape.degree_sum();
    j["notation"] = shape.notation();
  }
  if (!shape.notes.empty()) j["notes"] = shape.notes;
  return j;
}

Json to_json(const MonogenityVerdict& verdict) {
  Json j;
  j["prime"] = verdict.prime;
  Json p = Json::object();
  for (const auto& [h, count] : verdict.p_counts) p[std::to_string(h)] = count;
  Json n = Json::object();
  for (const auto& [h, count] : verdict.n_counts) n[std::to_string(h)] = count.fits_slong_p() ? Json(count.get_si()) : Json(count.get_str());
  j["P_counts"] = std::move(p);
  j["N_counts"] = std::move(n);
  j["common_index_divisor"] = verdict.common_index_divisor;
  j["witness_h"] = verdict.witness_h ? Json(*verdict.witness_h) : Json(nullptr);
  return j;
}

Json to_json(const SchurSpec& spec) {
  Json b = Json::array();
  for (const Integer& c : spec.b_coeffs) b.push_back(c.get_str());
  Json digits = Json::array();
  for (const auto& [digit, power] : spec.base_p_digits) digits.push_back(Json::array({digit, power}));
  return Json{{"m", spec.m}, {"prime", spec.p}, {"b_coeffs", std::move(b)}, {"base_p_digits", std::move(digits)}};
}

}  // namespace newtonpoly
