#include "newtonpoly/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <thread>

#include "newtonpoly/fixtures.hpp"
#include "newtonpoly/generate.hpp"
#include "newtonpoly/lemmas.hpp"
#include "newtonpoly/serialize.hpp"

namespace newtonpoly::cli {

namespace {

struct Outcome {
  Json doc;
  int status = kExitOk;
  /// Polygon drawn by --format svg; absent for reports without one.
  std::optional<Json> polygon;
};

struct Settings {
  std::optional<std::uint64_t> prime;
  std::string format = "json";
  std::string out_path;
  std::optional<std::uint64_t> degree_cap;
};

class Inputs {
 public:
  explicit Inputs(std::istream& in) : in_(in) {}

  RationalPoly poly(const std::string& arg) { return parse_poly(text(arg)); }

  std::string text(const std::string& arg) {
    std::string raw;
    if (arg == "-") {
      if (!stdin_) stdin_ = std::string(std::istreambuf_iterator<char>(in_), {});
      raw = *stdin_;
    } else if (!arg.empty() && arg.front() == '@') {
      std::ifstream file(arg.substr(1));
      if (!file) throw Error(ErrorCode::InvalidArgument, "cannot read " + arg.substr(1));
      raw.assign(std::istreambuf_iterator<char>(file), {});
    } else {
      raw = arg;
    }
    const auto first = raw.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    return raw.substr(first, raw.find_last_not_of(" \t\r\n") - first + 1);
  }

 private:
  std::istream& in_;
  std::optional<std::string> stdin_;
};

std::uint64_t resolve_cap(const Settings& s) {
  if (s.degree_cap) return *s.degree_cap;
  if (const char* env = std::getenv("NEWTON_DEGREE_CAP"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) throw Error(ErrorCode::InvalidArgument, std::string("bad NEWTON_DEGREE_CAP: ") + env);
    return v;
  }
  return kDefaultDegreeCap;
}

Prime need_prime(const Settings& s) {
  if (!s.prime) throw Error(ErrorCode::InvalidArgument, "--prime is required");
  return Prime(*s.prime);
}

int certificate_status(const TheoremCertificate& cert) { return cert.satisfied() ? kExitOk : kExitNegative; }

Json vertex_list(const NewtonPolygon& np) {
  Json out = Json::array();
  for (const LatticePoint& v : np.vertices()) out.push_back(Json::array({v.x, v.y}));
  return out;
}

std::vector<Integer> parse_integer_list(const std::string& text) {
  std::vector<Integer> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    Integer v;
    if (item.empty() || v.set_str(item, 10) != 0) throw Error(ErrorCode::InvalidArgument, "bad integer in list: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------- text output

std::string indent(const std::string& block) {
  std::string out;
  std::istringstream lines(block);
  for (std::string line; std::getline(lines, line);) out += "  " + line + '\n';
  return out;
}

bool looks_like_polygon(const Json& j) { return j.is_object() && j.contains("vertices") && j.contains("edges"); }

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string text_of(const Json& doc) {
  std::ostringstream out;
  if (looks_like_polygon(doc)) out << render_ascii(doc);
  if (!doc.is_object()) return out.str() + doc.dump() + '\n';
  for (const auto& [key, value] : doc.items()) {
    if (looks_like_polygon(doc) && (key == "prime" || key == "origin" || key == "vertices" || key == "edges")) continue;
    if (looks_like_polygon(value)) {
      out << key << ":\n" << indent(render_ascii(value));
    } else if (value.is_object() && value.contains("verdict")) {
      out << key << ": " << scalar_text(value["theorem"]) << ' ' << scalar_text(value["verdict"]) << '\n';
      for (const Json& v : value["violations"]) out << "  violation " << scalar_text(v["name"]) << ": " << scalar_text(v["detail"]) << '\n';
      if (value.contains("predicted_polygon")) out << "  predicted:\n" << indent(indent(render_ascii(value["predicted_polygon"])));
    } else if (value.is_structured()) {
      out << key << ": " << value.dump() << '\n';
    } else {
      out << key << ": " << scalar_text(value) << '\n';
    }
  }
  return out.str();
}

std::string fixtures_text(const Json& doc) {
  std::ostringstream out;
  for (const Json& f : doc["fixtures"]) {
    out << (f["passed"].get<bool>() ? "PASS " : "FAIL ") << f["name"].get<std::string>() << '\n';
    for (const Json& msg : f["failures"]) out << "  " << msg.get<std::string>() << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------- subcommands

Outcome cmd_np(const Settings& s, Inputs& inputs, const std::string& poly, const std::string& phi, bool strip) {
  const Prime p = need_prime(s);
  const RationalPoly f = inputs.poly(poly);
  const NewtonPolygon np = phi.empty() ? newton_polygon(f, p, strip) : phi_newton_polygon(f, inputs.poly(phi), p);
  Outcome o;
  o.doc = to_json(np);
  o.doc["factor_constraints"] = to_json(factor_constraints(np));
  o.polygon = to_json(np);
  return o;
}

Outcome cmd_merge(const Settings& s, Inputs& inputs, const std::string& a_text, const std::string& b_text) {
  const Prime p = need_prime(s);
  const RationalPoly a = inputs.poly(a_text);
  const RationalPoly b = inputs.poly(b_text);
  const TheoremCertificate cert = check_dumas(a, b, p);
  const NewtonPolygon product = newton_polygon(a * b, p);
  Outcome o;
  o.doc["merged"] = to_json(*cert.predicted_polygon);
  o.doc["product"] = to_json(product);
  o.doc["match"] = *cert.predicted_polygon == product;
  o.doc["factor_bound"] = to_json(*cert.factor_bound);
  o.status = *cert.predicted_polygon == product ? kExitOk : kExitNegative;
  o.polygon = o.doc["merged"];
  return o;
}

Outcome cmd_predict(const Settings& s, Inputs& inputs, const std::string& g_text, const std::string& f_text,
                    std::uint64_t n, const std::string& theorem) {
  const Prime p = need_prime(s);
  const RationalPoly f = inputs.poly(f_text);
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "--n must be positive");
  const bool iterate_mode = theorem == "iterate" || (theorem == "auto" && g_text.empty());
  if (!iterate_mode && g_text.empty()) throw Error(ErrorCode::InvalidArgument, "--g is required for " + theorem);

  std::vector<TheoremCertificate> attempts;
  std::optional<NewtonPolygon> predicted;
  if (iterate_mode) {
    attempts.push_back(check_iterate(f, p, n));
  } else {
    const RationalPoly g = inputs.poly(g_text);
    if (theorem == "auto" || theorem == "composition") attempts.push_back(check_composition(g, f, p));
    if (theorem == "negative-slope" || (theorem == "auto" && !attempts.back().satisfied())) {
      attempts.push_back(check_negative_slope_composition(g, f, p, n));
    }
    if (theorem == "pure" || (theorem == "auto" && n == 1 && !attempts.back().satisfied())) {
      attempts.push_back(check_pure_composition(g, f, p));
    }
    if (attempts.back().satisfied() && attempts.back().theorem == TheoremId::Composition) {
      predicted = predict_composition(g, f, p, n);
    }
  }
  if (theorem == "pure" && n != 1) throw Error(ErrorCode::InvalidArgument, "the pure composition check covers n = 1 only");

  const TheoremCertificate& chosen = attempts.back();
  if (!predicted && chosen.predicted_polygon) predicted = chosen.predicted_polygon;
  Outcome o;
  o.doc["n"] = n;
  o.doc["certificate"] = to_json(chosen);
  if (predicted) o.doc["predicted_polygon"] = to_json(*predicted);
  if (attempts.size() > 1) {
    Json all = Json::array();
    for (const TheoremCertificate& c : attempts) all.push_back(to_json(c));
    o.doc["attempts"] = std::move(all);
  }
  o.status = certificate_status(chosen);
  if (predicted) o.polygon = to_json(*predicted);
  return o;
}

Outcome cmd_verify(const Settings& s, Inputs& inputs, const std::string& g_text, const std::string& f_text, std::uint64_t n) {
  const Prime p = need_prime(s);
  if (g_text.empty()) throw Error(ErrorCode::InvalidArgument, "--g is required");
  const ComparisonReport report = verify_prediction(inputs.poly(g_text), inputs.poly(f_text), p, n, resolve_cap(s));
  Outcome o;
  o.doc = to_json(report);
  o.status = report.match ? kExitOk : kExitNegative;
  o.polygon = to_json(report.oracle);
  return o;
}

Outcome cmd_stability(const Settings& s, Inputs& inputs, const std::string& f_text, std::uint64_t n) {
  const Prime p = need_prime(s);
  const RationalPoly f = inputs.poly(f_text);
  const TheoremCertificate cert = eventual_stability(f, p);
  Outcome o;
  o.doc["certificate"] = to_json(cert);
  if (n > 0) {
    // Oracle: total height of NP_p(f^k) for k = 1..n.
    Json heights = Json::array();
    const std::uint64_t cap = resolve_cap(s);
    RationalPoly fk = f;
    for (std::uint64_t k = 1; k <= n; ++k) {
      if (k > 1) fk = compose(fk, f);
      if (static_cast<std::uint64_t>(fk.degree()) > cap) throw DegreeCapExceeded(static_cast<std::uint64_t>(fk.degree()), cap);
      const NewtonPolygon np = newton_polygon(fk, p);
      heights.push_back(Json{{"n", k}, {"degree", fk.degree()}, {"height", np.vertices().back().y - np.origin_height()}});
    }
    o.doc["oracle_heights"] = std::move(heights);
  }
  o.status = certificate_status(cert);
  return o;
}

Outcome cmd_purity(const Settings& s, Inputs& inputs, const std::string& f_text, std::uint64_t n) {
  const Prime p = need_prime(s);
  const RationalPoly f = inputs.poly(f_text);
  const TheoremCertificate cert = purity_certificate(f, p, n);
  Outcome o;
  o.doc["class"] = to_json(classify_purity(f, p));
  o.doc["certificate"] = to_json(cert);
  o.status = certificate_status(cert);
  if (cert.predicted_polygon) o.polygon = to_json(*cert.predicted_polygon);
  return o;
}

Outcome cmd_residual(const Settings& s, Inputs& inputs, const std::string& f_text, const std::string& phi_text) {
  const Prime p = need_prime(s);
  const RationalPoly f = inputs.poly(f_text);
  const RationalPoly phi = inputs.poly(phi_text);
  Outcome o;
  o.doc["phi"] = render(phi);
  o.doc["phi_polygon"] = to_json(phi_newton_polygon(f, phi, p));
  Json data = Json::array();
  for (const ResidualDatum& d : residual_data(f, phi, p)) data.push_back(to_json(d));
  o.doc["residuals"] = std::move(data);
  o.polygon = o.doc["phi_polygon"];
  return o;
}

Outcome cmd_split(const Settings& s, Inputs& inputs, const std::string& f_text) {
  const SplittingShape shape = analyze_splitting(inputs.poly(f_text), need_prime(s));
  Outcome o;
  o.doc = to_json(shape);
  o.status = shape.p_regular ? kExitOk : kExitNegative;
  return o;
}

Outcome cmd_index_divisor(const Settings& s, Inputs& inputs, const std::string& f_text) {
  Outcome o;
  o.doc = to_json(common_index_divisor(inputs.poly(f_text), need_prime(s)));
  return o;
}

Outcome cmd_schur(const Settings& s, Inputs& inputs, std::uint64_t m, const std::string& b_list, const std::string& f_text,
                  std::uint64_t n) {
  const Prime p = need_prime(s);
  if (b_list.empty() && m == 0) throw Error(ErrorCode::InvalidArgument, "give --m or --b");
  const SchurSpec spec = b_list.empty() ? SchurSpec::exponential(m, p) : SchurSpec::make(parse_integer_list(b_list), p);
  Outcome o;
  o.doc["spec"] = to_json(spec);
  o.doc["literal_polygon"] = to_json(newton_polygon(schur_polynomial(spec), p));
  if (spec.m % p.value() == 0) o.doc["schur_polygon"] = to_json(schur_polygon(spec));
  o.polygon = o.doc["literal_polygon"];
  if (!f_text.empty()) {
    const RationalPoly f = inputs.poly(f_text);
    const TheoremCertificate cert = schur_dynamical_irreducibility(f, spec, n);
    o.doc["certificate"] = to_json(cert);
    const NewtonPolygon oracle = newton_polygon(compose_iterated(schur_polynomial(spec), f, n, resolve_cap(s)), p);
    o.doc["oracle_polygon"] = to_json(oracle);
    if (cert.predicted_polygon) o.doc["oracle_match"] = *cert.predicted_polygon == oracle;
    o.status = cert.satisfied() && cert.predicted_polygon && *cert.predicted_polygon == oracle ? kExitOk : kExitNegative;
    o.polygon = to_json(oracle);
  }
  return o;
}

Outcome cmd_paper_examples() {
  Outcome o;
  Json list = Json::array();
  bool all = true;
  for (const FixtureResult& r : run_paper_fixtures()) {
    all = all && r.passed;
    list.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"failures", r.failures}, {"report", r.report}});
  }
  o.doc["fixtures"] = std::move(list);
  o.doc["passed"] = all;
  o.status = all ? kExitOk : kExitNegative;
  return o;
}

Json search_one(std::uint64_t seed, std::uint64_t index, const std::vector<std::uint64_t>& primes, std::uint64_t cap) {
  Rng rng(sweep_seed(seed, index));
  const Prime p(primes[index % primes.size()]);
  const RandomInstance inst = random_boundary_instance(rng, p);
  Json j{{"index", index}, {"prime", p.value()}, {"g", render(inst.g)}, {"f", render(inst.f)}};
  try {
    const ComparisonReport report = verify_prediction(inst.g, inst.f, p, 1, cap);
    std::vector<std::string> names;
    for (const Violation& v : report.certificate.violations) names.push_back(v.name);
    j["satisfied"] = report.certificate.satisfied();
    j["match"] = report.match;
    j["violations"] = names;
    j["predicted"] = vertex_list(report.predicted);
    j["oracle"] = vertex_list(report.oracle);
  } catch (const std::exception& ex) {
    j["error"] = ex.what();
  }
  return j;
}

Outcome cmd_search(const Settings& s, std::uint64_t seed, std::uint64_t count, unsigned threads,
                   const std::vector<std::uint64_t>& primes) {
  if (primes.empty()) throw Error(ErrorCode::InvalidArgument, "--primes must not be empty");
  for (std::uint64_t q : primes) (void)Prime(q);
  const std::uint64_t cap = resolve_cap(s);
  std::vector<Json> results(count);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i = next++; i < count; i = next++) results[i] = search_one(seed, i, primes, cap);
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::uint64_t>(count, 1))));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  Json counterexamples = Json::array();
  Json soundness = Json::array();
  std::uint64_t consistent = 0, preserved = 0, errors = 0;
  for (Json& r : results) {
    if (r.contains("error")) {
      ++errors;
    } else if (r["satisfied"].get<bool>()) {
      if (r["match"].get<bool>()) {
        ++consistent;
      } else {
        soundness.push_back(r);
      }
    } else if (r["match"].get<bool>()) {
      ++preserved;
    } else {
      counterexamples.push_back(r);
    }
  }
  Outcome o;
  o.doc["seed"] = seed;
  o.doc["count"] = count;
  o.doc["tally"] = Json{{"satisfied_and_match", consistent},
                        {"violated_and_mismatch", counterexamples.size()},
                        {"violated_but_match", preserved},
                        {"satisfied_but_mismatch", soundness.size()},
                        {"errors", errors}};
  o.doc["counterexamples"] = std::move(counterexamples);
  o.doc["soundness_failures"] = std::move(soundness);
  o.status = o.doc["soundness_failures"].empty() ? kExitOk : kExitNegative;
  return o;
}

void emit(const Settings& s, const Outcome& o, bool fixtures, std::ostream& out) {
  std::string body;
  if (s.format == "json") {
    body = o.doc.dump(2) + '\n';
  } else if (s.format == "text") {
    body = fixtures ? fixtures_text(o.doc) : text_of(o.doc);
  } else {
    if (!o.polygon) throw Error(ErrorCode::InvalidArgument, "this report has no polygon to draw as SVG");
    body = render_svg(*o.polygon);
  }
  if (s.out_path.empty()) {
    out << body;
    return;
  }
  std::ofstream file(s.out_path, std::ios::binary);
  if (!file || !(file << body)) throw Error(ErrorCode::InvalidArgument, "cannot write " + s.out_path);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Newton polygons of compositions and iterates"};
  app.name("newtonpoly");
  app.fallthrough();
  app.require_subcommand(1);

  Settings settings;
  std::uint64_t prime_value = 0;
  std::uint64_t cap_value = 0;
  app.add_option("--prime,-p", prime_value, "Prime p");
  app.add_option("--format", settings.format, "Output format")->check(CLI::IsMember({"json", "text", "svg"}));
  app.add_option("--out,-o", settings.out_path, "Write the report to PATH");
  app.add_option("--degree-cap", cap_value, "Largest composition degree (default from NEWTON_DEGREE_CAP or 100000)")
      ->check(CLI::PositiveNumber);

  Inputs inputs(in);
  std::function<Outcome()> action;
  bool fixtures = false;

  std::string poly_a, poly_b, g_text, f_text, phi_text, theorem = "auto", b_list;
  std::uint64_t n = 1, m = 0, seed = 1, count = 200;
  std::uint64_t stability_n = 0;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::uint64_t> primes{2, 3, 5};
  bool strip = false;

  auto* np = app.add_subcommand("np", "Newton polygon of one polynomial");
  np->add_option("poly", poly_a, "Polynomial, '-' or @file")->required();
  np->add_option("--phi", phi_text, "Polygon of the phi-adic expansion instead");
  np->add_flag("--strip", strip, "Divide out the largest power of x first");
  np->callback([&] { action = [&] { return cmd_np(settings, inputs, poly_a, phi_text, strip); }; });

  auto* merge = app.add_subcommand("merge", "Dumas merge of two polygons, checked against the product");
  merge->add_option("a", poly_a)->required();
  merge->add_option("b", poly_b)->required();
  merge->callback([&] { action = [&] { return cmd_merge(settings, inputs, poly_a, poly_b); }; });

  auto* predict = app.add_subcommand("predict", "Certificate and predicted polygon of g o f^n (or f^n)");
  predict->add_option("--g", g_text, "Outer polynomial; omit to predict f^n");
  predict->add_option("--f", f_text, "Inner polynomial")->required();
  predict->add_option("--n", n, "Iteration depth")->check(CLI::PositiveNumber);
  predict->add_option("--theorem", theorem)->check(CLI::IsMember({"auto", "composition", "iterate", "negative-slope", "pure"}));
  predict->callback([&] { action = [&] { return cmd_predict(settings, inputs, g_text, f_text, n, theorem); }; });

  auto* verify = app.add_subcommand("verify", "Compare the stretched polygon of g with the literal g o f^n");
  verify->add_option("--g", g_text)->required();
  verify->add_option("--f", f_text)->required();
  verify->add_option("--n", n)->check(CLI::PositiveNumber);
  verify->callback([&] { action = [&] { return cmd_verify(settings, inputs, g_text, f_text, n); }; });

  auto* stability = app.add_subcommand("stability", "Eventual stability certificate");
  stability->add_option("poly", f_text)->required();
  stability->add_option("--n", stability_n, "Also report oracle heights of f^1 .. f^n");
  stability->callback([&] { action = [&] { return cmd_stability(settings, inputs, f_text, stability_n); }; });

  auto* purity = app.add_subcommand("purity", "Purity class and factor certificate for f^n");
  purity->add_option("poly", f_text)->required();
  purity->add_option("--n", n)->check(CLI::PositiveNumber);
  purity->callback([&] { action = [&] { return cmd_purity(settings, inputs, f_text, n); }; });

  auto* residual = app.add_subcommand("residual", "Residual polynomials along the phi-polygon");
  residual->add_option("poly", f_text)->required();
  residual->add_option("--phi", phi_text, "Monic lift of an irreducible factor mod p")->required();
  residual->callback([&] { action = [&] { return cmd_residual(settings, inputs, f_text, phi_text); }; });

  auto* split = app.add_subcommand("split", "Splitting shape of p in the number field of f");
  split->add_option("poly", f_text)->required();
  split->callback([&] { action = [&] { return cmd_split(settings, inputs, f_text); }; });

  auto* index = app.add_subcommand("index-divisor", "Common index divisor test");
  index->add_option("poly", f_text)->required();
  index->callback([&] { action = [&] { return cmd_index_divisor(settings, inputs, f_text); }; });

  auto* schur = app.add_subcommand("schur", "Schur polynomial polygon and dynamical irreducibility");
  schur->add_option("--m", m, "Degree of the truncated exponential");
  schur->add_option("--b", b_list, "Comma-separated integers b_0,...,b_m");
  schur->add_option("--f", f_text, "Polynomial to compose with");
  schur->add_option("--n", n)->check(CLI::PositiveNumber);
  schur->callback([&] { action = [&] { return cmd_schur(settings, inputs, m, b_list, f_text, n); }; });

  auto* examples = app.add_subcommand("paper-examples", "Recompute the published worked examples");
  examples->callback([&] {
    fixtures = true;
    action = [] { return cmd_paper_examples(); };
  });

  auto* search = app.add_subcommand("search", "Random sweep near the composition theorem's boundary");
  search->add_option("--seed", seed);
  search->add_option("--count", count);
  search->add_option("--threads", threads)->check(CLI::PositiveNumber);
  search->add_option("--primes", primes)->delimiter(',');
  search->callback([&] { action = [&] { return cmd_search(settings, seed, count, threads, primes); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (app.count("--prime")) settings.prime = prime_value;
    if (app.count("--degree-cap")) settings.degree_cap = cap_value;
    const Outcome outcome = action();
    emit(settings, outcome, fixtures, out);
    return outcome.status;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitError;
  }
}

}  // namespace newtonpoly::cli
