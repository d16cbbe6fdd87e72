#include "newtonpoly/theorems.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "newtonpoly/lemmas.hpp"

namespace newtonpoly {

namespace {

std::int64_t checked_pow(std::uint64_t base, std::uint64_t n) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (base != 0 && out > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) / base) {
      throw Error(ErrorCode::InvalidArgument, "predicted abscissa does not fit in 64 bits");
    }
    out *= base;
  }
  return static_cast<std::int64_t>(out);
}

std::string rational_text(const Rational& q) {
  return q.get_den() == 1 ? q.get_num().get_str() : q.get_num().get_str() + "/" + q.get_den().get_str();
}

void require_nonconstant(const RationalPoly& f, const char* what) {
  if (f.is_constant()) throw Error(ErrorCode::ConstantPolynomial, std::string(what) + " must be nonconstant");
}

void require_nonzero_constant(const RationalPoly& f) {
  if (f.constant_term() == 0) throw ZeroConstantTermError(f.x_adic_order());
}

void finish(TheoremCertificate& cert) {
  cert.verdict = cert.violations.empty() ? Verdict::Satisfied : Verdict::Violated;
  if (!cert.satisfied()) {
    cert.predicted_polygon.reset();
    cert.factor_bound.reset();
  }
}

// Largest beta <= d coprime to u with vp(a_i) >= (u / beta)(d - i) for all i.
// On failure `near_miss` is the largest coprime beta and `failing` the first
// index (scanning down from d - 1) where it breaks.
struct BetaSearch {
  std::optional<std::int64_t> beta;
  std::optional<std::int64_t> near_miss;
  std::optional<std::int64_t> failing;
};

BetaSearch search_beta(const RationalPoly& f, Prime p, std::int64_t u) {
  BetaSearch out;
  const std::int64_t d = f.degree();
  for (std::int64_t beta = d; beta >= 1; --beta) {
    if (std::gcd(beta, u) != 1) continue;
    std::optional<std::int64_t> failing;
    for (std::int64_t i = d - 1; i >= 0; --i) {
      const Valuation v = vp(f.coefficient(static_cast<std::size_t>(i)), p);
      if (v.is_infinite()) continue;
      if (static_cast<__int128>(v.value()) * beta < static_cast<__int128>(u) * (d - i)) {
        failing = i;
        break;
      }
    }
    if (!failing) {
      out.beta = beta;
      return out;
    }
    if (!out.near_miss) {
      out.near_miss = beta;
      out.failing = failing;
    }
  }
  return out;
}

std::int64_t max_abs_floor(std::span<const Edge> edges) {
  std::int64_t best = 0;
  for (const Edge& e : edges) best = std::max(best, e.slope.abs().floor());
  return best;
}

}  // namespace

std::string_view theorem_name(TheoremId id) {
  switch (id) {
    case TheoremId::Dumas: return "Dumas";
    case TheoremId::Composition: return "Composition";
    case TheoremId::Iterate: return "Iterate";
    case TheoremId::NegativeSlopeComposition: return "NegativeSlopeComposition";
    case TheoremId::PureComposition: return "PureComposition";
    case TheoremId::Purity: return "Purity";
    case TheoremId::EventualStability: return "EventualStability";
    case TheoremId::SchurIrreducibility: return "SchurIrreducibility";
  }
  return "Unknown";
}

std::string_view verdict_name(Verdict v) { return v == Verdict::Satisfied ? "Satisfied" : "Violated"; }

std::string_view branch_name(Branch b) {
  switch (b) {
    case Branch::Strict: return "Strict";
    case Branch::EqualityViaConstantTerm: return "EqualityViaConstantTerm";
    case Branch::EqualityViaSlope: return "EqualityViaSlope";
  }
  return "Unknown";
}

std::string_view purity_kind_name(PurityClass::Kind k) {
  switch (k) {
    case PurityClass::Kind::PrPure: return "PrPure";
    case PurityClass::Kind::PrDumas: return "PrDumas";
    case PurityClass::Kind::NotPure: return "NotPure";
  }
  return "Unknown";
}

bool TheoremCertificate::has_violation(std::string_view name) const {
  return std::any_of(violations.begin(), violations.end(), [&](const Violation& v) { return v.name == name; });
}

NewtonPolygon stretch_polygon(const NewtonPolygon& np, std::uint64_t factor) {
  if (factor == 0) throw Error(ErrorCode::InvalidArgument, "stretch factor must be positive");
  std::vector<LatticePoint> vertices;
  for (const LatticePoint& v : np.vertices()) {
    if (v.x != 0 && static_cast<std::uint64_t>(std::abs(v.x)) >
                        static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) / factor) {
      throw Error(ErrorCode::InvalidArgument, "predicted abscissa does not fit in 64 bits");
    }
    vertices.push_back({v.x * static_cast<std::int64_t>(factor), v.y});
  }
  NewtonPolygon out = NewtonPolygon::from_vertices(std::move(vertices));
  out.prime = np.prime;
  return out;
}

CompositionHypotheses composition_hypotheses(const RationalPoly& g, const RationalPoly& f, Prime p) {
  require_nonconstant(g, "g");
  require_nonconstant(f, "f");
  require_nonzero_constant(g);
  CompositionHypotheses h;
  h.e = g.degree();
  h.d = f.degree();
  const NewtonPolygon np_g = newton_polygon(g, p);
  h.origin_shift = np_g.origin_height();
  for (const LatticePoint& v : np_g.vertices()) {
    h.m_list.push_back(h.e - v.x);
    h.r_list.push_back(v.y - h.origin_shift);
  }
  for (const Edge& e : np_g.edges()) h.lambdas.push_back(e.slope);

  // f(0) = 0 is allowed here: stripping x^k keeps every abscissa.
  const NewtonPolygon np_f = newton_polygon(f, p, true);
  if (!np_f.edges().empty()) h.lambda_f = np_f.edges().front().slope;
  h.vp_f0 = vp(f.constant_term(), p);
  h.vp_lead_f = vp(f.leading(), p);

  const Rational rt(h.r_list.back());
  const Rational bound = h.lambdas.front().to_rational() * (h.d + h.e - 1);
  if (rt < bound) {
    h.branch = Branch::Strict;
  } else if (rt == bound) {
    const Rational lambda1 = h.lambdas.front().to_rational();
    if (h.lambda_f && (h.vp_f0.is_infinite() || Rational(h.vp_f0.value()) > h.lambda_f->to_rational() * h.d)) {
      h.branch = Branch::EqualityViaConstantTerm;
    } else if (!h.lambda_f || h.lambda_f->to_rational() > lambda1) {
      h.branch = Branch::EqualityViaSlope;
    }
  }
  return h;
}

TheoremCertificate check_dumas(const RationalPoly& a, const RationalPoly& b, Prime p) {
  TheoremCertificate cert;
  cert.theorem = TheoremId::Dumas;
  const NewtonPolygon np_a = newton_polygon(a, p);
  const NewtonPolygon np_b = newton_polygon(b, p);
  const long k = (vp(a.leading(), p) + vp(b.leading(), p)).value();
  cert.predicted_polygon = dumas_merge(np_a, np_b, k);
  cert.factor_bound = factor_constraints(*cert.predicted_polygon);
  finish(cert);
  return cert;
}

TheoremCertificate check_composition(const RationalPoly& g, const RationalPoly& f, Prime p) {
  const CompositionHypotheses h = composition_hypotheses(g, f, p);
  TheoremCertificate cert;
  cert.theorem = TheoremId::Composition;
  cert.parameters.n = 1;

  for (std::int64_t i = 0; i < h.e; ++i) {
    const Valuation v = vp(g.coefficient(static_cast<std::size_t>(i)), p);
    if (v.is_infinite() || v.value() - h.origin_shift > 0) continue;
    cert.violations.push_back({"CoefficientNotDivisibleByP",
                               "vp(b_" + std::to_string(i) + ") - vp(b_e) = " +
                                   std::to_string(v.value() - h.origin_shift) + " is not positive"});
  }
  if (h.vp_lead_f != Valuation(0)) {
    cert.violations.push_back({"LeadingCoefficientNotUnit", "vp(lead f) = " + h.vp_lead_f.to_string() + ", need 0"});
  }
  const Slope& lambda1 = h.lambdas.front();
  if (h.lambda_f && *h.lambda_f < lambda1) {
    cert.violations.push_back({"FirstSlopeTooSmall", "lambda = " + h.lambda_f->to_string() + " < lambda_1 = " +
                                                         lambda1.to_string()});
  }
  if (!h.branch) {
    const Rational bound = lambda1.to_rational() * (h.d + h.e - 1);
    std::string detail = "r_t = " + std::to_string(h.r_list.back());
    detail += Rational(h.r_list.back()) > bound ? " > " : " = ";
    detail += rational_text(bound) + " = lambda_1(d + e - 1)";
    if (Rational(h.r_list.back()) == bound) detail += " and neither vp(f(0)) > d*lambda nor lambda > lambda_1";
    cert.violations.push_back({"ConstantValuationTooLarge", detail});
  }
  cert.parameters.branch = h.branch;
  if (cert.violations.empty()) {
    cert.predicted_polygon = stretch_polygon(newton_polygon(g, p), static_cast<std::uint64_t>(h.d));
    cert.factor_bound = factor_constraints(*cert.predicted_polygon);
  }
  if (h.origin_shift != 0) {
    cert.notes.push_back("g was divided by p^" + std::to_string(h.origin_shift) +
                         "; reported polygons are shifted back up");
  }
  finish(cert);
  return cert;
}

NewtonPolygon predict_composition(const RationalPoly& g, const RationalPoly& f, Prime p, std::uint64_t n) {
  if (n == 0) return newton_polygon(g, p);
  const TheoremCertificate positive = check_composition(g, f, p);
  if (positive.satisfied()) {
    return stretch_polygon(newton_polygon(g, p), static_cast<std::uint64_t>(checked_pow(f.degree(), n)));
  }
  const TheoremCertificate general = check_negative_slope_composition(g, f, p, n);
  if (general.satisfied()) return *general.predicted_polygon;
  std::string names;
  for (const Violation& v : positive.violations) names += (names.empty() ? "" : ", ") + v.name;
  for (const Violation& v : general.violations) names += (names.empty() ? "" : ", ") + v.name;
  throw Error(ErrorCode::HypothesesNotSatisfied, "no composition theorem applies: " + names);
}

TheoremCertificate check_iterate(const RationalPoly& f, Prime p, std::uint64_t n) {
  require_nonconstant(f, "f");
  require_nonzero_constant(f);
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "iterate depth must be positive");
  TheoremCertificate cert;
  cert.theorem = TheoremId::Iterate;
  cert.parameters.n = n;
  const NewtonPolygon np = newton_polygon(f, p);
  const std::int64_t d = f.degree();
  if (d < 2) {
    cert.violations.push_back({"DegreeTooSmall", "deg f = " + std::to_string(d) + ", need at least 2"});
  }
  if (np.origin_height() != 0) {
    cert.violations.push_back(
        {"LeadingCoefficientNotUnit", "vp(a_d) = " + std::to_string(np.origin_height()) + ", need 0"});
  }
  const LatticePoint first = np.vertices()[1];
  if (first.y <= 0) {
    cert.violations.push_back(
        {"FirstVertexValuationNotPositive", "vp(a_m1) = " + std::to_string(first.y) + ", need > 0"});
  }
  const std::int64_t r_t = np.vertices().back().y;
  const Rational bound = Rational(first.y, first.x) * (2 * d - 1);
  if (Rational(r_t) > bound) {
    cert.violations.push_back({"ConstantValuationTooLarge", "vp(a_0) = " + std::to_string(r_t) + " > " +
                                                                rational_text(bound) +
                                                                " = (vp(a_m1)/(d - m1))(2d - 1)"});
  }
  if (cert.violations.empty()) {
    cert.predicted_polygon = stretch_polygon(np, static_cast<std::uint64_t>(checked_pow(d, n - 1)));
    cert.factor_bound = factor_constraints(*cert.predicted_polygon);
    cert.parameters.eventually_stable = true;
    cert.notes.push_back("p | a_i for every i < d follows from vp(a_m1) > 0 and convexity");
    cert.notes.push_back("every iterate has at most " + std::to_string(r_t) + " irreducible factors");
  }
  finish(cert);
  return cert;
}

TheoremCertificate check_negative_slope_composition(const RationalPoly& g, const RationalPoly& f, Prime p,
                                                    std::uint64_t n) {
  require_nonconstant(g, "g");
  require_nonconstant(f, "f");
  require_nonzero_constant(g);
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "iterate depth must be positive");
  TheoremCertificate cert;
  cert.theorem = TheoremId::NegativeSlopeComposition;
  cert.parameters.n = n;
  const NewtonPolygon np_g = newton_polygon(g, p);
  const std::int64_t d = f.degree();
  const Valuation lead = vp(f.leading(), p);
  if (lead != Valuation(0)) {
    cert.violations.push_back({"LeadingCoefficientNotUnit", "vp(a_d) = " + lead.to_string() + ", need 0"});
  }
  const std::int64_t u = max_abs_floor(np_g.edges()) + 1;
  cert.parameters.u = u;
  const BetaSearch search = search_beta(f, p, u);
  if (!search.beta) {
    std::string detail = "u = " + std::to_string(u);
    if (search.near_miss) {
      const std::int64_t i = *search.failing;
      detail += "; best beta = " + std::to_string(*search.near_miss) + " fails at i = " + std::to_string(i) +
                ": vp(a_" + std::to_string(i) + ") = " +
                vp(f.coefficient(static_cast<std::size_t>(i)), p).to_string() + " < " +
                rational_text(Rational(u * (d - i), *search.near_miss));
      cert.parameters.beta = search.near_miss;
      cert.parameters.failing_index = search.failing;
    } else {
      detail += "; no beta <= " + std::to_string(d) + " is coprime to u";
    }
    cert.violations.push_back({"NoValidBeta", detail});
  } else {
    cert.parameters.beta = search.beta;
  }

  if (cert.violations.empty()) {
    // Re-check at each level: the slopes of g o f^(k-1) are lambda_j / d^(k-1),
    // so the same (u, beta) must still dominate them.
    NewtonPolygon level = np_g;
    for (std::uint64_t k = 1; k <= n; ++k) {
      if (max_abs_floor(level.edges()) >= u) {
        cert.violations.push_back({"LevelSlopeTooLarge", "level " + std::to_string(k) + " has a slope of size >= u"});
        break;
      }
      level = stretch_polygon(level, static_cast<std::uint64_t>(d));
    }
    if (cert.violations.empty()) {
      cert.predicted_polygon = level;
      cert.factor_bound = factor_constraints(level);
      if (n > 1) cert.notes.push_back("hypotheses re-checked at each of " + std::to_string(n) + " levels");
    }
  }
  finish(cert);
  return cert;
}

PurityClass classify_purity(const RationalPoly& f, Prime p) {
  require_nonconstant(f, "f");
  require_nonzero_constant(f);
  PurityClass out;
  out.prime = p.value();
  const std::int64_t d = f.degree();
  const Valuation v0 = vp(f.constant_term(), p);
  out.r = v0.value();
  if (vp(f.leading(), p) != Valuation(0) || out.r < 1) return out;
  for (std::int64_t i = 1; i < d; ++i) {
    const Valuation v = vp(f.coefficient(static_cast<std::size_t>(i)), p);
    if (v.is_infinite()) continue;
    if (static_cast<__int128>(v.value()) * d < static_cast<__int128>(out.r) * (d - i)) return out;
  }
  out.kind = std::gcd(out.r, d) == 1 ? PurityClass::Kind::PrDumas : PurityClass::Kind::PrPure;
  return out;
}

TheoremCertificate purity_certificate(const RationalPoly& f, Prime p, std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "iterate depth must be positive");
  const PurityClass cls = classify_purity(f, p);
  TheoremCertificate cert;
  cert.theorem = TheoremId::Purity;
  cert.parameters.n = n;
  cert.parameters.r = cls.r;
  const std::int64_t d = f.degree();
  if (cls.kind == PurityClass::Kind::NotPure) {
    cert.violations.push_back({"NotPure", "f is not p^r-pure for r = vp(a_0) = " + std::to_string(cls.r)});
  }
  if (d < 2 && n > 1) {
    cert.violations.push_back({"DegreeTooSmall", "iterates of a linear polynomial need not stay pure"});
  }
  if (cert.violations.empty()) {
    NewtonPolygon np = NewtonPolygon::from_vertices({{0, 0}, {checked_pow(d, n), cls.r}});
    np.prime = p.value();
    cert.predicted_polygon = np;
    cert.factor_bound = factor_constraints(np);
    if (cls.kind == PurityClass::Kind::PrDumas) cert.notes.push_back("gcd(r, d) = 1: every iterate is irreducible");
  }
  finish(cert);
  return cert;
}

TheoremCertificate check_pure_composition(const RationalPoly& g, const RationalPoly& f, Prime p) {
  require_nonconstant(g, "g");
  require_nonzero_constant(g);
  const PurityClass cls = classify_purity(f, p);
  TheoremCertificate cert;
  cert.theorem = TheoremId::PureComposition;
  cert.parameters.n = 1;
  cert.parameters.r = cls.r;
  const NewtonPolygon np_g = newton_polygon(g, p);
  if (cls.kind == PurityClass::Kind::NotPure) {
    cert.violations.push_back({"NotPure", "f is not p^r-pure"});
  } else {
    for (const Edge& e : np_g.edges()) {
      if (e.slope.abs() < Slope(cls.r, 1)) continue;
      cert.violations.push_back({"SlopeExceedsR", "|" + e.slope.to_string() + "| >= r = " + std::to_string(cls.r)});
    }
  }
  if (cert.violations.empty()) {
    cert.predicted_polygon = stretch_polygon(np_g, static_cast<std::uint64_t>(f.degree()));
    cert.factor_bound = factor_constraints(*cert.predicted_polygon);
  }
  finish(cert);
  return cert;
}

TheoremCertificate eventual_stability(const RationalPoly& f, Prime p) {
  require_nonconstant(f, "f");
  require_nonzero_constant(f);
  TheoremCertificate cert;
  cert.theorem = TheoremId::EventualStability;
  const std::int64_t d = f.degree();
  if (d < 2) cert.violations.push_back({"DegreeTooSmall", "deg f = " + std::to_string(d) + ", need at least 2"});
  const Valuation lead = vp(f.leading(), p);
  if (lead != Valuation(0)) {
    cert.violations.push_back({"LeadingCoefficientNotUnit", "vp(a_d) = " + lead.to_string() + ", need 0"});
  }
  for (std::int64_t i = 0; i < d; ++i) {
    const Valuation v = vp(f.coefficient(static_cast<std::size_t>(i)), p);
    if (v > Valuation(0)) continue;
    cert.violations.push_back(
        {"NotXPowerModP", "vp(a_" + std::to_string(i) + ") = " + v.to_string() + " is not positive"});
  }
  if (cert.violations.empty()) {
    const std::int64_t bound = vp(f.constant_term(), p).value();
    FactorConstraints fc;
    fc.max_factor_count = bound;
    fc.min_factor_degree = 1;
    cert.factor_bound = fc;
    cert.parameters.eventually_stable = true;
    cert.notes.push_back("NP_p(f^n) runs from (0,0) to (d^n, " + std::to_string(bound) + ") for every n");
  }
  finish(cert);
  return cert;
}

ComparisonReport verify_prediction(const RationalPoly& g, const RationalPoly& f, Prime p, std::uint64_t n,
                                   std::uint64_t degree_cap) {
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "iterate depth must be positive");
  require_nonconstant(f, "f");
  ComparisonReport report;
  report.n = n;
  const RationalPoly composed = compose_iterated(g, f, n, degree_cap);
  report.oracle = newton_polygon(composed, p);
  report.predicted = stretch_polygon(newton_polygon(g, p), static_cast<std::uint64_t>(checked_pow(f.degree(), n)));
  report.match = report.predicted == report.oracle;

  const auto pv = report.predicted.vertices();
  const auto ov = report.oracle.vertices();
  if (!report.match) {
    std::size_t i = 0;
    while (i < pv.size() && i < ov.size() && pv[i] == ov[i]) ++i;
    report.first_difference = i;
    if (i > 0) report.last_common_vertex = pv[i - 1];
  }

  report.certificate = check_composition(g, f, p);
  if (!report.certificate.satisfied()) {
    TheoremCertificate general = check_negative_slope_composition(g, f, p, n);
    if (general.satisfied()) {
      report.certificate = std::move(general);
    } else if (n == 1) {
      TheoremCertificate pure = check_pure_composition(g, f, p);
      if (pure.satisfied()) report.certificate = std::move(pure);
    }
  }
  if (report.certificate.satisfied()) {
    report.certificate.parameters.n = n;
    report.certificate.predicted_polygon = report.predicted;
  }

  if (report.certificate.theorem == TheoremId::Composition && report.certificate.satisfied()) {
    const CompositionHypotheses h = composition_hypotheses(g, f, p);
    report.lemma_checks.push_back(check_vertex_height_bound(h));
    report.lemma_checks.push_back(check_telescoping(h));
    report.lemma_checks.push_back(check_vertex_valuations(h, composed, p, n));
    report.lemma_checks.push_back(check_coefficient_lower_bounds(h, composed, p, n));
  }
  if (f.constant_term() != 0) report.lemma_checks.push_back(check_constant_term_valuation(g, f, p));
  return report;
}

}  // namespace newtonpoly
