#include "newtonpoly/polygon.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "newtonpoly/ffield.hpp"

namespace newtonpoly {

namespace {

__int128 cross(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return static_cast<__int128>(b.x - a.x) * (c.y - a.y) - static_cast<__int128>(b.y - a.y) * (c.x - a.x);
}

Edge make_edge(std::int64_t length, std::int64_t rise) {
  Edge e;
  e.slope = Slope(rise, length);
  e.length = length;
  e.lattice_points = std::gcd(length, rise) - 1;
  return e;
}

// Minimum valuation over the coefficients of a digit polynomial.
Valuation digit_valuation(const RationalPoly& digit, Prime p) {
  Valuation best = Valuation::infinity();
  for (const Rational& c : digit.coefficients()) best = std::min(best, vp(c, p));
  return best;
}

}  // namespace

NewtonPolygon NewtonPolygon::point(LatticePoint origin) {
  NewtonPolygon np;
  np.vertices_.push_back(origin);
  return np;
}

NewtonPolygon NewtonPolygon::from_vertices(std::vector<LatticePoint> vertices) {
  if (vertices.empty()) throw Error(ErrorCode::InvalidArgument, "polygon needs at least one vertex");
  NewtonPolygon np;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    const std::int64_t dx = vertices[i].x - vertices[i - 1].x;
    if (dx <= 0) throw Error(ErrorCode::InvalidArgument, "polygon vertices must have increasing x");
    Edge e = make_edge(dx, vertices[i].y - vertices[i - 1].y);
    if (!np.edges_.empty() && !(np.edges_.back().slope < e.slope)) {
      throw Error(ErrorCode::InvalidArgument, "polygon slopes must strictly increase");
    }
    np.edges_.push_back(e);
  }
  np.vertices_ = std::move(vertices);
  return np;
}

NewtonPolygon NewtonPolygon::lower_hull(std::vector<LatticePoint> points) {
  if (points.empty()) throw Error(ErrorCode::InvalidArgument, "lower hull of an empty point set");
  std::sort(points.begin(), points.end(), [](const LatticePoint& a, const LatticePoint& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  });
  std::vector<LatticePoint> hull;
  for (const LatticePoint& pt : points) {
    if (!hull.empty() && hull.back().x == pt.x) continue;  // lowest y at this x already kept
    while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), pt) <= 0) hull.pop_back();
    hull.push_back(pt);
  }
  return from_vertices(std::move(hull));
}

Rational NewtonPolygon::height_at(const Rational& x) const {
  if (vertices_.empty()) throw Error(ErrorCode::InvalidArgument, "empty polygon");
  if (x < vertices_.front().x || x > vertices_.back().x) {
    throw Error(ErrorCode::InvalidArgument, "abscissa outside polygon");
  }
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (x <= vertices_[i + 1].x) {
      return Rational(vertices_[i].y) + edges_[i].slope.to_rational() * (x - vertices_[i].x);
    }
  }
  return Rational(vertices_.back().y);
}

std::vector<LatticePoint> valuation_points(const RationalPoly& f, Prime p) {
  std::vector<LatticePoint> points;
  const long d = f.degree();
  for (long i = d; i >= 0; --i) {
    const Rational& c = f.coefficient(static_cast<std::size_t>(i));
    if (c == 0) continue;
    points.push_back({d - i, vp(c, p).value()});
  }
  return points;
}

NewtonPolygon newton_polygon(const RationalPoly& f, Prime p, bool strip_x_power) {
  if (f.is_constant()) throw Error(ErrorCode::ConstantPolynomial, "Newton polygon of a constant");
  if (f.constant_term() == 0) {
    if (!strip_x_power) throw ZeroConstantTermError(f.x_adic_order());
    // Stripping x^k keeps every point's abscissa unchanged.
    const RationalPoly stripped = f.strip_x_power();
    if (stripped.is_constant()) {
      NewtonPolygon np = NewtonPolygon::point({0, vp(stripped.constant_term(), p).value()});
      np.prime = p.value();
      return np;
    }
    return newton_polygon(stripped, p, false);
  }
  NewtonPolygon np = NewtonPolygon::lower_hull(valuation_points(f, p));
  np.prime = p.value();
  return np;
}

NewtonPolygon phi_newton_polygon(const RationalPoly& f, const RationalPoly& phi, Prime p) {
  if (!phi.is_monic() || phi.degree() < 1) throw Error(ErrorCode::NonMonicBase, "phi must be monic of degree >= 1");
  const FpPoly phi_bar = FpPoly::from_rational(phi, p);
  if (!is_irreducible(phi_bar)) {
    throw Error(ErrorCode::PhiNotIrreducibleModP, render(phi) + " is reducible modulo " + std::to_string(p.value()));
  }
  const PhiExpansion expansion = phi_expand(f, phi);
  if (expansion.digits.empty() || expansion.digits.front().is_zero()) {
    throw Error(ErrorCode::PhiDividesF, render(phi) + " divides " + render(f));
  }
  const std::size_t n = expansion.digits.size() - 1;
  const RationalPoly& top = expansion.digits.back();
  bool residue_ok = digit_valuation(top, p) == Valuation(0);
  for (std::size_t i = 1; residue_ok && i < top.coefficients().size(); ++i) {
    residue_ok = vp(top.coefficient(i), p) > Valuation(0);
  }
  for (std::size_t j = 0; residue_ok && j < n; ++j) {
    residue_ok = digit_valuation(expansion.digits[j], p) > Valuation(0);
  }
  if (!residue_ok) {
    throw Error(ErrorCode::ResidueNotPhiPower,
                render(f) + " is not a unit times a power of " + render(phi) + " modulo " + std::to_string(p.value()));
  }
  std::vector<LatticePoint> points;
  for (std::size_t j = 0; j <= n; ++j) {
    const Valuation v = digit_valuation(expansion.digits[j], p);
    if (v.is_infinite()) continue;
    points.push_back({static_cast<std::int64_t>(n - j), v.value()});
  }
  NewtonPolygon np = NewtonPolygon::lower_hull(std::move(points));
  np.prime = p.value();
  return np;
}

NewtonPolygon dumas_merge(const NewtonPolygon& a, const NewtonPolygon& b, std::int64_t k) {
  std::vector<Edge> translates(a.edges().begin(), a.edges().end());
  translates.insert(translates.end(), b.edges().begin(), b.edges().end());
  std::stable_sort(translates.begin(), translates.end(),
                   [](const Edge& l, const Edge& r) { return l.slope < r.slope; });

  std::vector<LatticePoint> vertices{{0, k}};
  std::size_t i = 0;
  while (i < translates.size()) {
    std::int64_t length = 0;
    std::int64_t rise = 0;
    std::size_t j = i;
    for (; j < translates.size() && translates[j].slope == translates[i].slope; ++j) {
      length += translates[j].length;
      rise += translates[j].rise();
    }
    vertices.push_back({vertices.back().x + length, vertices.back().y + rise});
    i = j;
  }
  NewtonPolygon np = NewtonPolygon::from_vertices(std::move(vertices));
  if (a.prime && a.prime == b.prime) np.prime = a.prime;
  np.merged_translates = std::move(translates);
  return np;
}

FactorConstraints factor_constraints(const NewtonPolygon& np) {
  FactorConstraints out;
  out.min_factor_degree = std::numeric_limits<std::int64_t>::max();
  for (const Edge& e : np.edges()) {
    const std::int64_t segments = e.segments();
    const std::int64_t span = e.length / segments;
    out.max_factor_count += segments;
    for (std::int64_t s = 0; s < segments; ++s) out.admissible_degree_summands.push_back(span);
    out.per_edge_degree_divisor.push_back(e.slope.den());
    out.min_factor_degree = std::min(out.min_factor_degree, span);
  }
  if (np.edges().empty()) out.min_factor_degree = 0;
  return out;
}

}  // namespace newtonpoly
