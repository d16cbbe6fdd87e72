#pragma once

#include <string>
#include <vector>

#include "newtonpoly/serialize.hpp"

namespace newtonpoly {

/// One published worked example, recomputed end to end.
struct FixtureResult {
  std::string name;
  bool passed = false;
  std::vector<std::string> failures;  // empty when passed
  Json report;
};

/// Examples with published polygons and broken hypotheses: the three
/// positive-slope counterexamples, the (u, beta) counterexample and the
/// non-monogenic quadrinomial.
std::vector<FixtureResult> run_paper_fixtures();

}  // namespace newtonpoly
