#include "newtonpoly/fixtures.hpp"

#include <sstream>

namespace newtonpoly {

namespace {

using Vertices = std::vector<LatticePoint>;

std::string vertex_text(std::span<const LatticePoint> vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << '(' << vs[i].x << ',' << vs[i].y << ')';
  return out.str();
}

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void polygon(const std::string& label, const NewtonPolygon& np, const Vertices& expected) {
    result_.report[label] = to_json(np);
    const Vertices got(np.vertices().begin(), np.vertices().end());
    if (got != expected) {
      result_.failures.push_back(label + ": expected " + vertex_text(expected) + ", got " + vertex_text(got));
    }
  }

  void violated(const std::string& label, const TheoremCertificate& cert, const std::string& violation) {
    result_.report[label] = to_json(cert);
    if (cert.satisfied() || !cert.has_violation(violation)) {
      result_.failures.push_back(label + ": expected Violated with " + violation);
    }
  }

  void check(const std::string& what, bool ok) {
    if (!ok) result_.failures.push_back(what);
  }

  Json& report() { return result_.report; }

  FixtureResult finish() {
    result_.passed = result_.failures.empty();
    return std::move(result_);
  }

 private:
  FixtureResult result_;
};

FixtureResult composition_fixture(const std::string& name, const char* g_text, const char* f_text, const Vertices& np_f,
                                  const Vertices& np_g, const Vertices& oracle, const std::string& violation) {
  const Prime p(2);
  Recorder rec(name);
  const RationalPoly g = parse_poly(g_text);
  const RationalPoly f = parse_poly(f_text);
  rec.report()["g"] = g_text;
  rec.report()["f"] = f_text;
  rec.polygon("np_f", newton_polygon(f, p), np_f);
  rec.polygon("np_g", newton_polygon(g, p), np_g);
  rec.polygon("oracle", newton_polygon(compose(g, f), p), oracle);
  rec.violated("certificate", check_composition(g, f, p), violation);
  const ComparisonReport cmp = verify_prediction(g, f, p, 1);
  rec.check("prediction should mismatch the oracle", !cmp.match);
  return rec.finish();
}

FixtureResult iterate_fixture() {
  const Prime p(2);
  Recorder rec("iterate-constant-valuation");
  const char* f_text = "x^11+2x^4+4x+16";
  const RationalPoly f = parse_poly(f_text);
  rec.report()["f"] = f_text;
  rec.polygon("np_f", newton_polygon(f, p), {{0, 0}, {7, 1}, {10, 2}, {11, 4}});
  rec.polygon("np_f2", newton_polygon(iterate(f, 2), p), {{0, 0}, {77, 1}, {110, 2}, {117, 3}, {121, 4}});
  rec.violated("certificate", check_iterate(f, p, 2), "ConstantValuationTooLarge");
  return rec.finish();
}

FixtureResult negative_slope_fixture() {
  const Prime p(2);
  Recorder rec("negative-slope-no-beta");
  const RationalPoly g = parse_poly("x^3+4x+16");
  const RationalPoly f = parse_poly("x^5+4x+4");
  rec.report()["g"] = "x^3+4x+16";
  rec.report()["f"] = "x^5+4x+4";
  rec.polygon("np_g", newton_polygon(g, p), {{0, 0}, {2, 2}, {3, 4}});
  rec.polygon("oracle", newton_polygon(compose(g, f), p), {{0, 0}, {10, 2}, {14, 4}, {15, 5}});
  rec.violated("certificate", check_negative_slope_composition(g, f, p), "NoValidBeta");
  return rec.finish();
}

FixtureResult quadrinomial_fixture() {
  const Prime p(2);
  Recorder rec("non-monogenic-quadrinomial");
  const RationalPoly f = parse_poly("x^4+54x^3+432x+3456");
  rec.report()["f"] = "x^4+54x^3+432x+3456";
  const SplittingShape shape = analyze_splitting(f, p);
  rec.report()["splitting"] = to_json(shape);
  rec.check("splitting should be 2-regular", shape.p_regular);
  if (shape.p_regular) {
    const MonogenityVerdict verdict = common_index_divisor(f, p);
    rec.report()["monogenity"] = to_json(verdict);
    const auto p1 = verdict.p_counts.find(1);
    const auto n1 = verdict.n_counts.find(1);
    rec.check("P_1 should be 3", p1 != verdict.p_counts.end() && p1->second == 3);
    rec.check("N_1 should be 2", n1 != verdict.n_counts.end() && n1->second == 2);
    rec.check("2 should be a common index divisor", verdict.common_index_divisor);
  }
  return rec.finish();
}

FixtureResult guarded(const std::string& name, FixtureResult (*run)()) {
  try {
    return run();
  } catch (const std::exception& ex) {
    FixtureResult r;
    r.name = name;
    r.failures.push_back(std::string("exception: ") + ex.what());
    return r;
  }
}

}  // namespace

std::vector<FixtureResult> run_paper_fixtures() {
  std::vector<FixtureResult> out;
  out.push_back(guarded("composition-first-slope", [] {
    return composition_fixture("composition-first-slope", "x^3+4x+16", "x^3+2x+4", {{0, 0}, {2, 1}, {3, 2}},
                               {{0, 0}, {2, 2}, {3, 4}}, {{0, 0}, {6, 2}, {8, 3}, {9, 5}}, "FirstSlopeTooSmall");
  }));
  out.push_back(guarded("composition-constant-valuation", [] {
    return composition_fixture("composition-constant-valuation", "x^3+2x+8", "x^3+2x^2+2x+4", {{0, 0}, {2, 1}, {3, 2}},
                               {{0, 0}, {2, 1}, {3, 3}}, {{0, 0}, {6, 1}, {8, 2}, {9, 4}}, "ConstantValuationTooLarge");
  }));
  out.push_back(guarded("iterate-constant-valuation", iterate_fixture));
  out.push_back(guarded("negative-slope-no-beta", negative_slope_fixture));
  out.push_back(guarded("non-monogenic-quadrinomial", quadrinomial_fixture));
  return out;
}

}  // namespace newtonpoly
