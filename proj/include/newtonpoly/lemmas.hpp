#pragma once

#include <cstdint>
#include <vector>

#include "newtonpoly/theorems.hpp"

namespace newtonpoly {

// Machine-checkable inequalities behind the composition theorem. Every check
// uses the normalised heights of CompositionHypotheses (r_0 = 0).

/// r_s <= (r_1 / (e - m_1)) (alpha - m_s) for every vertex, alpha = d + e - 1.
LemmaCheck check_vertex_height_bound(const CompositionHypotheses& h);

/// r_{s+1} = r_a + sum_{i=a+1}^{s+1} lambda_i (m_{i-1} - m_i) for all
/// 0 <= a <= s + 1 <= t.
LemmaCheck check_telescoping(const CompositionHypotheses& h);

/// C = g o f^N given literally (not normalised). vp(C_k) = r_s + shift at
/// k = d^N m_s.
LemmaCheck check_vertex_valuations(const CompositionHypotheses& h, const RationalPoly& composed, Prime p,
                                   std::uint64_t N);

/// vp(C_k) >= r_{s+1} + lambda_{s+1} (m_{s+1} - k / d^N) + shift for every
/// k <= d^N m_s and s < t.
LemmaCheck check_coefficient_lower_bounds(const CompositionHypotheses& h, const RationalPoly& composed, Prime p,
                                          std::uint64_t N);

/// When vp(a_0) > max_j (vp(b_0) - vp(b_j)) / j, vp(g(f(0))) = vp(b_0).
/// `holds` is true when the premise fails (the statement is vacuous); the
/// detail says which case applied.
LemmaCheck check_constant_term_valuation(const RationalPoly& g, const RationalPoly& f, Prime p);

/// Premise of check_constant_term_valuation.
bool constant_term_premise(const RationalPoly& g, const RationalPoly& f, Prime p);

}  // namespace newtonpoly
