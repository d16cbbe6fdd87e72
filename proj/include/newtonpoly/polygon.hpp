#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "newtonpoly/arith.hpp"
#include "newtonpoly/poly.hpp"

namespace newtonpoly {

struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

struct Edge {
  Slope slope;
  std::int64_t length = 0;  // horizontal
  /// Lattice points strictly inside the edge: gcd(length, rise) - 1.
  std::int64_t lattice_points = 0;

  std::int64_t rise() const { return slope.num() * (length / slope.den()); }
  /// Number of minimal lattice segments the edge is cut into.
  std::int64_t segments() const { return lattice_points + 1; }

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Lower convex boundary of a set of lattice points. Vertices are strict
/// hull vertices; edge slopes strictly increase left to right.
class NewtonPolygon {
 public:
  NewtonPolygon() = default;

  /// A degenerate polygon with a single vertex and no edges.
  static NewtonPolygon point(LatticePoint origin);
  /// Build from a vertex list whose consecutive slopes strictly increase.
  static NewtonPolygon from_vertices(std::vector<LatticePoint> vertices);
  /// Lower hull of arbitrary points (duplicates in x keep the lowest y).
  static NewtonPolygon lower_hull(std::vector<LatticePoint> points);

  std::span<const LatticePoint> vertices() const noexcept { return vertices_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::int64_t origin_height() const { return vertices_.empty() ? 0 : vertices_.front().y; }
  std::int64_t width() const { return vertices_.empty() ? 0 : vertices_.back().x - vertices_.front().x; }
  std::int64_t start_x() const { return vertices_.empty() ? 0 : vertices_.front().x; }

  /// Height of the polygon at abscissa x (exact). x must lie in range.
  Rational height_at(const Rational& x) const;

  std::optional<std::uint64_t> prime;
  /// Slopes and lengths of the translates a Dumas merge consumed, before
  /// equal slopes were coalesced. Empty for polygons built any other way.
  std::vector<Edge> merged_translates;

  friend bool operator==(const NewtonPolygon& a, const NewtonPolygon& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<LatticePoint> vertices_;
  std::vector<Edge> edges_;
};

/// Points (deg f - i, vp(a_i)) for every nonzero coefficient.
std::vector<LatticePoint> valuation_points(const RationalPoly& f, Prime p);

/// NP_p(f). Throws Error(ConstantPolynomial) for constants and
/// ZeroConstantTermError when f(0) = 0, unless `strip_x_power` is set, in
/// which case the largest x^k factor is removed first.
NewtonPolygon newton_polygon(const RationalPoly& f, Prime p, bool strip_x_power = false);

/// Polygon of the digit valuations of the phi-expansion of f, in the same
/// orientation as newton_polygon: the top digit sits at x = 0.
/// Requires phi monic and irreducible mod p, f mod p a unit times a power of
/// phi mod p, and phi not dividing f.
NewtonPolygon phi_newton_polygon(const RationalPoly& f, const RationalPoly& phi, Prime p);

/// Dumas: translates of the edges of both inputs, sorted by slope, starting
/// at (0, k). Equal slopes coalesce.
NewtonPolygon dumas_merge(const NewtonPolygon& a, const NewtonPolygon& b, std::int64_t k);

struct FactorConstraints {
  std::int64_t max_factor_count = 0;
  /// Horizontal spans of the minimal lattice segments, left to right.
  std::vector<std::int64_t> admissible_degree_summands;
  /// Reduced slope denominator of each edge; it divides the degree of the
  /// part of any factor lying on that edge.
  std::vector<std::int64_t> per_edge_degree_divisor;
  std::int64_t min_factor_degree = 0;
};

FactorConstraints factor_constraints(const NewtonPolygon& np);

}  // namespace newtonpoly
