#include <gtest/gtest.h>

#include "newtonpoly/generate.hpp"
#include "newtonpoly/polygon.hpp"

using namespace newtonpoly;

namespace {

RationalPoly P(const char* text) { return parse_poly(text); }

std::vector<LatticePoint> V(std::initializer_list<LatticePoint> pts) { return pts; }

std::vector<LatticePoint> vertices_of(const NewtonPolygon& np) { return {np.vertices().begin(), np.vertices().end()}; }

}  // namespace

TEST(NewtonPolygon, PublishedPolygons) {
  EXPECT_EQ(vertices_of(newton_polygon(P("x^3+2x+4"), Prime(2))), V({{0, 0}, {2, 1}, {3, 2}}));
  EXPECT_EQ(vertices_of(newton_polygon(P("x^11+2x^4+4x+16"), Prime(2))), V({{0, 0}, {7, 1}, {10, 2}, {11, 4}}));
  EXPECT_EQ(vertices_of(newton_polygon(compose(P("x^3+4x+16"), P("x^5+4x+4")), Prime(2))),
            V({{0, 0}, {10, 2}, {14, 4}, {15, 5}}));
}

TEST(NewtonPolygon, EisensteinSingleEdge) {
  const NewtonPolygon np = newton_polygon(P("x^2+2x+2"), Prime(2));
  EXPECT_EQ(vertices_of(np), V({{0, 0}, {2, 1}}));
  ASSERT_EQ(np.edges().size(), 1u);
  EXPECT_EQ(np.edges()[0].slope, Slope(1, 2));
  EXPECT_EQ(np.edges()[0].lattice_points, 0);
  EXPECT_GT(Rational(1), np.height_at(Rational(1)));
}

TEST(NewtonPolygon, EdgeData) {
  const NewtonPolygon np = newton_polygon(P("x^4+2x^2+4"), Prime(2));
  ASSERT_EQ(np.edges().size(), 1u);
  EXPECT_EQ(np.edges()[0].length, 4);
  EXPECT_EQ(np.edges()[0].rise(), 2);
  EXPECT_EQ(np.edges()[0].lattice_points, 1);
  EXPECT_EQ(vertices_of(np), V({{0, 0}, {4, 2}}));
}

TEST(NewtonPolygon, ErrorsAndStrip) {
  EXPECT_THROW(newton_polygon(P("7"), Prime(2)), Error);
  try {
    (void)newton_polygon(P("x^4+2x^2"), Prime(2));
    FAIL();
  } catch (const ZeroConstantTermError& e) {
    EXPECT_EQ(e.power(), 2u);
  }
  EXPECT_EQ(vertices_of(newton_polygon(P("x^4+2x^2"), Prime(2), true)), V({{0, 0}, {2, 1}}));
}

TEST(NewtonPolygon, RationalAndNegativeHeights) {
  const NewtonPolygon np = newton_polygon(P("2x^2+x+2"), Prime(2));
  EXPECT_EQ(vertices_of(np), V({{0, 1}, {1, 0}, {2, 1}}));
  EXPECT_EQ(np.origin_height(), 1);
  const NewtonPolygon q = newton_polygon(P("x^2 + (1/4)"), Prime(2));
  EXPECT_EQ(vertices_of(q), V({{0, 0}, {2, -2}}));
}

TEST(NewtonPolygon, HullIsSoundOnRandomPolynomials) {
  Rng rng(7);
  std::uniform_int_distribution<int> deg(1, 12), val(0, 6), gap(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    const int d = deg(rng);
    std::vector<std::optional<long>> v(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
      if (i == 0 || i == d || gap(rng) > 0) v[static_cast<std::size_t>(i)] = val(rng);
    }
    const Prime p(trial % 2 ? 3 : 2);
    const RationalPoly f = random_poly(rng, p, v);
    const NewtonPolygon np = newton_polygon(f, p);
    const auto points = valuation_points(f, p);
    for (const LatticePoint& pt : points) ASSERT_GE(Rational(pt.y), np.height_at(Rational(pt.x)));
    for (const LatticePoint& vert : np.vertices()) {
      ASSERT_NE(std::find(points.begin(), points.end(), vert), points.end());
    }
    for (std::size_t i = 1; i < np.edges().size(); ++i) ASSERT_LT(np.edges()[i - 1].slope, np.edges()[i].slope);
    ASSERT_EQ(np.width(), d);
  }
}

TEST(PhiPolygon, CoincidesWithOrdinaryPolygonForX) {
  Rng rng(99);
  std::uniform_int_distribution<int> deg(1, 8), val(0, 4);
  for (int trial = 0; trial < 150; ++trial) {
    const int d = deg(rng);
    std::vector<std::optional<long>> v(static_cast<std::size_t>(d) + 1);
    v[static_cast<std::size_t>(d)] = 0;
    for (int i = 0; i < d; ++i) v[static_cast<std::size_t>(i)] = 1 + val(rng);
    const RationalPoly f = random_poly(rng, Prime(2), v);
    ASSERT_EQ(phi_newton_polygon(f, P("x"), Prime(2)), newton_polygon(f, Prime(2)));
  }
}

TEST(PhiPolygon, ShiftedBase) {
  const NewtonPolygon np = phi_newton_polygon(P("x^2+2x+3"), P("x+1"), Prime(2));
  EXPECT_EQ(vertices_of(np), V({{0, 0}, {2, 1}}));
  EXPECT_EQ(np.edges()[0].slope, Slope(1, 2));
  EXPECT_THROW(phi_newton_polygon(P("x^2+x+1"), P("x"), Prime(2)), Error);
  EXPECT_THROW(phi_newton_polygon(P("x^2+2x"), P("x"), Prime(2)), Error);
}

TEST(Dumas, PublishedMerges) {
  const Prime p(2);
  const NewtonPolygon a = newton_polygon(P("x^2+2x+2"), p);
  const NewtonPolygon b = newton_polygon(P("x+2"), p);
  const NewtonPolygon merged = dumas_merge(a, b, 0);
  EXPECT_EQ(vertices_of(merged), V({{0, 0}, {2, 1}, {3, 2}}));
  EXPECT_EQ(merged, newton_polygon(P("x^3+4x^2+6x+4"), p));

  const NewtonPolygon twice = dumas_merge(b, b, 0);
  ASSERT_EQ(twice.edges().size(), 1u);
  EXPECT_EQ(twice.edges()[0].length, 2);
  EXPECT_EQ(twice, newton_polygon(P("x^2+4x+4"), p));
  EXPECT_EQ(twice.merged_translates.size(), 2u);

  const NewtonPolygon neutral = dumas_merge(a, NewtonPolygon::point({0, 0}), 0);
  EXPECT_EQ(neutral, a);
}

TEST(Dumas, MergeEqualsProductPolygon) {
  Rng rng(2024);
  std::uniform_int_distribution<int> deg(1, 6), val(-1, 4), gap(0, 3);
  auto draw = [&](Prime p) {
    const int d = deg(rng);
    std::vector<std::optional<long>> v(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
      if (i == 0 || i == d || gap(rng) > 0) v[static_cast<std::size_t>(i)] = val(rng);
    }
    return random_poly(rng, p, v, true);
  };
  for (int trial = 0; trial < 500; ++trial) {
    const Prime p(std::array<std::uint64_t, 3>{2, 3, 5}[trial % 3]);
    const RationalPoly a = draw(p), b = draw(p);
    const std::int64_t k = (vp(a.leading(), p) + vp(b.leading(), p)).value();
    ASSERT_EQ(dumas_merge(newton_polygon(a, p), newton_polygon(b, p), k), newton_polygon(a * b, p))
        << render(a) << " * " << render(b) << " at " << p.value();
  }
}

TEST(FactorConstraints, CountsLatticeSegments) {
  const FactorConstraints q = factor_constraints(newton_polygon(P("x^4+54x^3+432x+3456"), Prime(2)));
  EXPECT_EQ(q.max_factor_count, 3);
  EXPECT_EQ(q.admissible_degree_summands, (std::vector<std::int64_t>{1, 2, 1}));

  const FactorConstraints dumas = factor_constraints(NewtonPolygon::from_vertices({{0, 0}, {9, 4}}));
  EXPECT_EQ(dumas.max_factor_count, 1);
  EXPECT_EQ(dumas.min_factor_degree, 9);

  const FactorConstraints pure = factor_constraints(NewtonPolygon::from_vertices({{0, 0}, {8, 6}}));
  EXPECT_EQ(pure.max_factor_count, 2);
  EXPECT_EQ(pure.min_factor_degree, 4);
  EXPECT_EQ(pure.per_edge_degree_divisor, (std::vector<std::int64_t>{4}));
}

TEST(NewtonPolygon, FromVerticesRejectsNonConvexInput) {
  EXPECT_THROW(NewtonPolygon::from_vertices({{0, 0}, {2, 2}, {3, 2}}), Error);
  EXPECT_THROW(NewtonPolygon::from_vertices({{0, 0}, {0, 1}}), Error);
}
