#include "newtonpoly/lemmas.hpp"

namespace newtonpoly {

namespace {

Rational lambda(const CompositionHypotheses& h, std::size_t i) { return h.lambdas[i - 1].to_rational(); }

std::string text(const Rational& q) { return q.get_str(); }

std::int64_t power(std::int64_t base, std::uint64_t n) {
  std::int64_t out = 1;
  for (std::uint64_t i = 0; i < n; ++i) out *= base;
  return out;
}

}  // namespace

LemmaCheck check_vertex_height_bound(const CompositionHypotheses& h) {
  LemmaCheck out{"vertex_height_bound", true, ""};
  const std::size_t t = h.lambdas.size();
  const Rational alpha(h.d + h.e - 1);
  const Rational lambda1 = Rational(h.r_list[1], h.e - h.m_list[1]);
  for (std::size_t s = 0; s <= t; ++s) {
    const Rational rhs = lambda1 * (alpha - h.m_list[s]);
    if (Rational(h.r_list[s]) > rhs) {
      out.holds = false;
      out.detail = "r_" + std::to_string(s) + " = " + std::to_string(h.r_list[s]) + " > " + text(rhs);
      return out;
    }
  }
  out.detail = "all " + std::to_string(t + 1) + " vertices below the bound";
  return out;
}

LemmaCheck check_telescoping(const CompositionHypotheses& h) {
  LemmaCheck out{"telescoping", true, ""};
  const std::size_t t = h.lambdas.size();
  for (std::size_t s1 = 0; s1 <= t; ++s1) {
    for (std::size_t a = 0; a <= s1; ++a) {
      Rational sum(h.r_list[a]);
      for (std::size_t i = a + 1; i <= s1; ++i) sum += lambda(h, i) * (h.m_list[i - 1] - h.m_list[i]);
      if (sum != h.r_list[s1]) {
        out.holds = false;
        out.detail = "r_" + std::to_string(s1) + " != telescoped sum from vertex " + std::to_string(a);
        return out;
      }
    }
  }
  out.detail = "identity holds for every vertex pair";
  return out;
}

LemmaCheck check_vertex_valuations(const CompositionHypotheses& h, const RationalPoly& composed, Prime p,
                                   std::uint64_t N) {
  LemmaCheck out{"vertex_valuations", true, ""};
  const std::int64_t scale = power(h.d, N);
  for (std::size_t s = 0; s < h.m_list.size(); ++s) {
    const std::size_t k = static_cast<std::size_t>(scale * h.m_list[s]);
    const Valuation v = vp(composed.coefficient(k), p);
    const Valuation want(h.r_list[s] + h.origin_shift);
    if (v != want) {
      out.holds = false;
      out.detail = "vp(C_" + std::to_string(k) + ") = " + v.to_string() + ", expected " + want.to_string();
      return out;
    }
  }
  out.detail = "vp(C_k) = r_s at all " + std::to_string(h.m_list.size()) + " vertices";
  return out;
}

LemmaCheck check_coefficient_lower_bounds(const CompositionHypotheses& h, const RationalPoly& composed, Prime p,
                                          std::uint64_t N) {
  LemmaCheck out{"coefficient_lower_bounds", true, ""};
  const std::int64_t scale = power(h.d, N);
  std::vector<Valuation> vals;
  vals.reserve(composed.coefficients().size());
  for (const Rational& c : composed.coefficients()) vals.push_back(vp(c, p));
  std::size_t checked = 0;
  for (std::size_t s = 0; s + 1 < h.m_list.size(); ++s) {
    const Rational lam = lambda(h, s + 1);
    const std::int64_t top = scale * h.m_list[s];
    for (std::int64_t k = 0; k <= top && k < static_cast<std::int64_t>(vals.size()); ++k) {
      const Valuation v = vals[static_cast<std::size_t>(k)];
      ++checked;
      if (v.is_infinite()) continue;
      const Rational bound = h.r_list[s + 1] + h.origin_shift + lam * (h.m_list[s + 1] - Rational(k, scale));
      if (Rational(v.value()) < bound) {
        out.holds = false;
        out.detail = "vp(C_" + std::to_string(k) + ") = " + v.to_string() + " < " + text(bound);
        return out;
      }
    }
  }
  out.detail = std::to_string(checked) + " coefficient bounds hold";
  return out;
}

bool constant_term_premise(const RationalPoly& g, const RationalPoly& f, Prime p) {
  const Valuation a0 = vp(f.constant_term(), p);
  const Valuation b0 = vp(g.constant_term(), p);
  if (a0.is_infinite() || b0.is_infinite()) return false;
  for (long j = 1; j <= g.degree(); ++j) {
    const Valuation bj = vp(g.coefficient(static_cast<std::size_t>(j)), p);
    if (bj.is_infinite()) continue;
    if (Rational(a0.value()) <= Rational(b0.value() - bj.value(), j)) return false;
  }
  return true;
}

LemmaCheck check_constant_term_valuation(const RationalPoly& g, const RationalPoly& f, Prime p) {
  LemmaCheck out{"constant_term_valuation", true, ""};
  if (!constant_term_premise(g, f, p)) {
    out.detail = "premise not met; nothing to check";
    return out;
  }
  const Valuation got = vp(g.eval(f.constant_term()), p);
  const Valuation want = vp(g.constant_term(), p);
  out.holds = got == want;
  out.detail = "vp(g(f(0))) = " + got.to_string() + ", vp(b_0) = " + want.to_string();
  return out;
}

}  // namespace newtonpoly
