#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "newtonpoly/arith.hpp"
#include "newtonpoly/polygon.hpp"
#include "newtonpoly/poly.hpp"

namespace newtonpoly {

enum class TheoremId {
  Dumas,
  Composition,               // positive-slope stretch of g o f^n
  Iterate,                   // polygon of f^n from the polygon of f
  NegativeSlopeComposition,  // stretch with arbitrary slopes, via (u, beta)
  PureComposition,           // g o f for p^r-pure f, slopes lambda_i / deg f
  Purity,
  EventualStability,
  SchurIrreducibility,
};

enum class Verdict { Satisfied, Violated };

/// Which disjunct certified the composition theorem.
enum class Branch { Strict, EqualityViaConstantTerm, EqualityViaSlope };

std::string_view theorem_name(TheoremId id);
std::string_view verdict_name(Verdict v);
std::string_view branch_name(Branch b);

struct Violation {
  std::string name;    // stable identifier, e.g. "FirstSlopeTooSmall"
  std::string detail;  // human-readable explanation with the numbers involved
};

struct CertificateParameters {
  std::optional<std::int64_t> u;
  std::optional<std::int64_t> beta;
  std::optional<Branch> branch;
  std::optional<std::uint64_t> n;
  std::optional<std::int64_t> r;
  /// Near-miss data when no beta works.
  std::optional<std::int64_t> failing_index;
  std::optional<bool> eventually_stable;
};

/// A Satisfied certificate carries a predicted polygon, except for
/// eventual stability, which only certifies a factor bound.
struct TheoremCertificate {
  TheoremId theorem = TheoremId::Composition;
  Verdict verdict = Verdict::Violated;
  std::vector<Violation> violations;
  std::vector<std::string> notes;
  std::optional<NewtonPolygon> predicted_polygon;
  std::optional<FactorConstraints> factor_bound;
  CertificateParameters parameters;

  bool satisfied() const noexcept { return verdict == Verdict::Satisfied; }
  bool has_violation(std::string_view name) const;
};

/// Polygon data of g (after dividing by p^vp(b_e)) and of f, as used by the
/// composition theorems.
struct CompositionHypotheses {
  std::vector<Slope> lambdas;        // slopes of NP_p(g)
  std::vector<std::int64_t> m_list;  // m_0 = e > m_1 > ... > m_t = 0
  std::vector<std::int64_t> r_list;  // normalised vertex heights, r_0 = 0
  std::optional<Slope> lambda_f;     // first slope of NP_p(f); empty means +infinity
  Valuation vp_f0;                   // vp(f(0))
  Valuation vp_lead_f;
  std::int64_t d = 0;
  std::int64_t e = 0;
  std::int64_t origin_shift = 0;     // vp(b_e)
  std::optional<Branch> branch;
};

/// Throws ZeroConstantTermError if g(0) = 0, Error(ConstantPolynomial) if f
/// or g is constant.
CompositionHypotheses composition_hypotheses(const RationalPoly& g, const RationalPoly& f, Prime p);

/// Multiply every abscissa by `factor`, keeping heights.
NewtonPolygon stretch_polygon(const NewtonPolygon& np, std::uint64_t factor);

TheoremCertificate check_dumas(const RationalPoly& a, const RationalPoly& b, Prime p);

/// Positive-slope composition theorem. Prediction is for n = 1.
TheoremCertificate check_composition(const RationalPoly& g, const RationalPoly& f, Prime p);

/// Polygon of g o f^n from whichever composition theorem applies (positive
/// slopes first, then the (u, beta) form). n = 0 returns NP_p(g). Throws
/// Error(HypothesesNotSatisfied) when neither applies.
NewtonPolygon predict_composition(const RationalPoly& g, const RationalPoly& f, Prime p, std::uint64_t n);

/// Iterate theorem with the prediction for NP_p(f^n).
TheoremCertificate check_iterate(const RationalPoly& f, Prime p, std::uint64_t n = 2);

/// Composition with arbitrary slopes via (u, beta). The prediction is for
/// g o f^n; each level is re-checked against the predicted polygon of the
/// previous one.
TheoremCertificate check_negative_slope_composition(const RationalPoly& g, const RationalPoly& f, Prime p, std::uint64_t n = 1);

TheoremCertificate check_pure_composition(const RationalPoly& g, const RationalPoly& f, Prime p);

struct PurityClass {
  enum class Kind { PrPure, PrDumas, NotPure };
  Kind kind = Kind::NotPure;
  std::int64_t r = 0;
  std::uint64_t prime = 2;

  friend bool operator==(const PurityClass&, const PurityClass&) = default;
};

std::string_view purity_kind_name(PurityClass::Kind k);

/// Throws ZeroConstantTermError if f(0) = 0.
PurityClass classify_purity(const RationalPoly& f, Prime p);

/// Factor-count certificate for f^n when f is p^r-pure.
TheoremCertificate purity_certificate(const RationalPoly& f, Prime p, std::uint64_t n = 1);

/// f = a_d x^d mod p with vp(a_d) = 0 gives at most vp(a_0) factors of
/// every iterate.
TheoremCertificate eventual_stability(const RationalPoly& f, Prime p);

struct LemmaCheck {
  std::string name;
  bool holds = true;
  std::string detail;
};

struct ComparisonReport {
  bool match = false;
  NewtonPolygon predicted;  // NP_p(g) stretched by d^n
  NewtonPolygon oracle;     // polygon of the literal composition
  /// First vertex index where the lists differ.
  std::optional<std::size_t> first_difference;
  std::optional<LatticePoint> last_common_vertex;
  TheoremCertificate certificate;
  std::vector<LemmaCheck> lemma_checks;
  std::uint64_t n = 1;
};

/// Compose g o f^n literally and compare with the predicted stretch. Throws
/// DegreeCapExceeded.
ComparisonReport verify_prediction(const RationalPoly& g, const RationalPoly& f, Prime p, std::uint64_t n,
                                   std::uint64_t degree_cap = kDefaultDegreeCap);

}  // namespace newtonpoly
