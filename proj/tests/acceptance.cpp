// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "newtonpoly/fixtures.hpp"
#include "newtonpoly/generate.hpp"
#include "newtonpoly/lemmas.hpp"
#include "newtonpoly/ore.hpp"

using namespace newtonpoly;

namespace {

RationalPoly P(const char* text) { return parse_poly(text); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

std::string vertex_text(const NewtonPolygon& np) {
  std::ostringstream out;
  for (std::size_t i = 0; i < np.vertices().size(); ++i) {
    out << (i ? "," : "") << '(' << np.vertices()[i].x << ',' << np.vertices()[i].y << ')';
  }
  return out.str();
}

// Instances from the soundness sweep that the composition theorem certified,
// with their literal compositions, reused by the lemma criterion.
struct CertifiedComposition {
  RationalPoly g, f;
  Prime p{2};
  std::vector<RationalPoly> composed;  // index n - 1
};

std::vector<CertifiedComposition> g_certified;

Outcome paper_fixtures() {
  Outcome o;
  std::size_t passed = 0;
  for (const FixtureResult& r : run_paper_fixtures()) {
    if (r.passed) {
      ++passed;
    } else {
      o.fail(r.name + ": " + r.failures.front());
    }
  }
  if (o.ok) o.detail = std::to_string(passed) + " fixtures reproduced exactly";
  return o;
}

Outcome soundness_sweep() {
  Outcome o;
  constexpr std::uint64_t kInstances = 300;
  constexpr std::uint64_t kBudget = 2000;
  constexpr std::array<std::uint64_t, 3> kPrimes{2, 3, 5};
  constexpr std::array<TheoremId, 3> kTheorems{TheoremId::Composition, TheoremId::Iterate,
                                               TheoremId::NegativeSlopeComposition};
  std::uint64_t comparisons = 0;
  for (std::uint64_t i = 0; i < kInstances && o.ok; ++i) {
    Rng rng(sweep_seed(2024, i));
    const Prime p(kPrimes[i % 3]);
    const TheoremId theorem = kTheorems[(i / 3) % 3];
    const RandomInstance inst = random_satisfied_instance(rng, theorem, p, kBudget);
    CertifiedComposition record{inst.g, inst.f, p, {}};
    RationalPoly current = theorem == TheoremId::Iterate ? inst.f : inst.g;
    for (std::uint64_t n = 1; n <= inst.max_n; ++n) {
      current = theorem == TheoremId::Iterate && n == 1 ? inst.f : compose(current, inst.f);
      NewtonPolygon predicted;
      if (theorem == TheoremId::Iterate) {
        predicted = *check_iterate(inst.f, p, n).predicted_polygon;
      } else if (theorem == TheoremId::Composition) {
        predicted = predict_composition(inst.g, inst.f, p, n);
        record.composed.push_back(current);
      } else {
        const TheoremCertificate c = check_negative_slope_composition(inst.g, inst.f, p, n);
        if (!c.satisfied()) {
          o.fail("negative-slope certificate lost at n = " + std::to_string(n));
          break;
        }
        predicted = *c.predicted_polygon;
      }
      const NewtonPolygon oracle = newton_polygon(current, p);
      ++comparisons;
      if (predicted != oracle) {
        o.fail(std::string(theorem_name(theorem)) + " mismatch for g = " + render(inst.g) + ", f = " + render(inst.f) +
               ", p = " + std::to_string(p.value()) + ", n = " + std::to_string(n) + ": predicted " +
               vertex_text(predicted) + ", oracle " + vertex_text(oracle));
        break;
      }
    }
    if (theorem == TheoremId::Composition) g_certified.push_back(std::move(record));
  }
  if (o.ok) {
    o.detail = std::to_string(kInstances) + " certified instances, " + std::to_string(comparisons) +
               " polygon comparisons up to degree 2000";
  }
  return o;
}

Outcome lemma_suite() {
  Outcome o;
  std::uint64_t checks = 0;
  for (const CertifiedComposition& c : g_certified) {
    const CompositionHypotheses h = composition_hypotheses(c.g, c.f, c.p);
    std::vector<LemmaCheck> results{check_vertex_height_bound(h), check_telescoping(h)};
    for (std::size_t n = 1; n <= c.composed.size(); ++n) {
      results.push_back(check_vertex_valuations(h, c.composed[n - 1], c.p, n));
      results.push_back(check_coefficient_lower_bounds(h, c.composed[n - 1], c.p, n));
    }
    for (const LemmaCheck& r : results) {
      ++checks;
      if (!r.holds) o.fail(r.name + " failed for g = " + render(c.g) + ", f = " + render(c.f) + ": " + r.detail);
    }
  }
  if (g_certified.empty()) o.fail("no certified composition instances");
  if (o.ok) o.detail = std::to_string(checks) + " checks on " + std::to_string(g_certified.size()) + " instances";
  return o;
}

Outcome dumas_products() {
  Outcome o;
  Rng rng(31337);
  std::uniform_int_distribution<int> deg(1, 8), val(-2, 5), gap(0, 3);
  auto draw = [&](Prime p) {
    const int d = deg(rng);
    std::vector<std::optional<long>> v(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) {
      if (i == 0 || i == d || gap(rng) > 0) v[static_cast<std::size_t>(i)] = val(rng);
    }
    return random_poly(rng, p, v, true);
  };
  for (int trial = 0; trial < 500 && o.ok; ++trial) {
    const Prime p(std::array<std::uint64_t, 3>{2, 3, 5}[trial % 3]);
    const RationalPoly a = draw(p), b = draw(p);
    const TheoremCertificate c = check_dumas(a, b, p);
    const NewtonPolygon product = newton_polygon(a * b, p);
    if (*c.predicted_polygon != product) {
      o.fail("merge of " + render(a) + " and " + render(b) + " gives " + vertex_text(*c.predicted_polygon) +
             ", product polygon " + vertex_text(product));
    }
  }
  if (o.ok) o.detail = "500 random products";
  return o;
}

Outcome schur_pipeline() {
  Outcome o;
  std::uint64_t cases = 0;
  for (std::uint64_t p : {2, 3, 5}) {
    for (std::uint64_t m = p; m <= 60; m += p) {
      const SchurSpec spec = SchurSpec::exponential(m, Prime(p));
      const NewtonPolygon formula = schur_polygon(spec);
      const NewtonPolygon literal = newton_polygon(schur_polynomial(spec), Prime(p));
      std::vector<Slope> a, b;
      for (const Edge& e : formula.edges()) a.push_back(e.slope);
      for (const Edge& e : literal.edges()) b.push_back(e.slope);
      ++cases;
      if (a != b || formula != literal) o.fail("m = " + std::to_string(m) + ", p = " + std::to_string(p));
    }
  }
  const SchurSpec e2 = SchurSpec::exponential(2, Prime(2));
  const RationalPoly f = P("x^3+2x+2");
  for (std::uint64_t n = 1; n <= 2; ++n) {
    const TheoremCertificate cert = schur_dynamical_irreducibility(f, e2, n);
    if (!cert.satisfied()) o.fail("certificate for E_2 and x^3+2x+2 is Violated at n = " + std::to_string(n));
    const NewtonPolygon oracle = newton_polygon(compose_iterated(schur_polynomial(e2), f, n), Prime(2));
    const Slope want = n == 1 ? Slope(1, 6) : Slope(1, 18);
    if (oracle.edges().size() != 1 || oracle.edges()[0].slope != want) {
      o.fail("oracle polygon at n = " + std::to_string(n) + " is " + vertex_text(oracle));
    }
    if (cert.predicted_polygon && *cert.predicted_polygon != oracle) o.fail("prediction differs from oracle");
  }
  if (o.ok) o.detail = std::to_string(cases) + " (m, p) pairs; E_2 o f and E_2 o f^2 are single edges of slope 1/6, 1/18";
  return o;
}

Outcome ore_pipeline() {
  Outcome o;
  const Prime two(2);
  const RationalPoly quad = P("x^4+54x^3+432x+3456");
  const SplittingShape s = analyze_splitting(quad, two);
  if (!s.p_regular) o.fail("quadrinomial is not 2-regular");
  const MonogenityVerdict v = common_index_divisor(quad, two);
  if (v.p_counts.at(1) != 3 || v.n_counts.at(1) != 2 || !v.common_index_divisor) o.fail("expected P_1 = 3 > N_1 = 2");

  const SplittingShape cubic = splitting_shape(P("x^3+18x+36"), two);
  const std::vector<SplittingEntry> want{{2, 1, 1}, {1, 1, 1}};
  if (cubic.entries != want || cubic.degree_sum() != 3) o.fail("x^3+18x+36 shape is " + cubic.notation());
  if (o.ok) o.detail = "P_1 = 3 > N_1 = 2 (common index divisor); " + cubic.notation() + ", sum ef = 3";
  return o;
}

Outcome eventual_stability_family() {
  Outcome o;
  const Prime two(2);
  const RationalPoly f = P("x^12+6x^6+20x^2+56");
  const TheoremCertificate cert = eventual_stability(f, two);
  if (!cert.satisfied() || cert.factor_bound->max_factor_count != 3) o.fail("certificate for the n = 4 family member");
  const NewtonPolygon np2 = newton_polygon(iterate(f, 2), two);
  if (np2.vertices().back().y - np2.origin_height() != 3) o.fail("NP_2(f^2) height is not 3");

  // Property: every f = x^d mod p with p | f(0) keeps the height vp(f(0)) on its iterates.
  Rng rng(8);
  for (int trial = 0; trial < 60 && o.ok; ++trial) {
    const Prime p(std::array<std::uint64_t, 3>{2, 3, 5}[trial % 3]);
    const long d = 2 + trial % 3;
    std::vector<std::optional<long>> vals(static_cast<std::size_t>(d) + 1);
    vals[static_cast<std::size_t>(d)] = 0;
    for (long i = 0; i < d; ++i) vals[static_cast<std::size_t>(i)] = 1 + (trial * 7 + i) % 4;
    const RationalPoly g = random_poly(rng, p, vals);
    const TheoremCertificate c = eventual_stability(g, p);
    const std::int64_t bound = c.factor_bound ? c.factor_bound->max_factor_count : -1;
    RationalPoly it = g;
    for (int n = 1; n <= 3 && o.ok; ++n) {
      if (n > 1) it = compose(it, g);
      const NewtonPolygon np = newton_polygon(it, p);
      if (!c.satisfied() || np.vertices().back().y != bound) o.fail("height drift for " + render(g));
    }
  }
  if (o.ok) o.detail = "bound vp_2(56) = 3, NP_2(f^2) height 3, 60 random family members stable to n = 3";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"paper fixtures", 1.0, paper_fixtures},
      {"theorem soundness sweep", 60.0, soundness_sweep},
      {"lemma suite", 30.0, lemma_suite},
      {"Dumas merge", 30.0, dumas_products},
      {"Schur pipeline", 10.0, schur_pipeline},
      {"Ore pipeline", 5.0, ore_pipeline},
      {"eventual stability", 30.0, eventual_stability_family},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& ex) {
      o.fail(std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > criteria[i].budget_seconds) o.fail("took longer than the time budget");
    failures += o.ok ? 0 : 1;
    std::printf("%s criterion %zu (%s, %.2fs): %s\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].name, secs,
                o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
