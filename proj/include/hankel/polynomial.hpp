#pragma once

#include <utility>
#include <vector>

#include "hankel/numbers.hpp"

namespace hankel {

// Dense univariate polynomial over Q(i), coefficients ascending by degree.
// The zero polynomial is the empty vector.
using XPoly = std::vector<GaussRat>;

void xp_trim(XPoly& p);
inline bool xp_is_zero(const XPoly& p) { return p.empty(); }
inline long xp_degree(const XPoly& p) { return static_cast<long>(p.size()) - 1; }

XPoly xp_add(const XPoly& a, const XPoly& b);
XPoly xp_sub(const XPoly& a, const XPoly& b);
XPoly xp_mul(const XPoly& a, const XPoly& b);
XPoly xp_scale(const XPoly& a, const GaussRat& c);
std::pair<XPoly, XPoly> xp_divmod(const XPoly& a, const XPoly& b);  // quotient, remainder
XPoly xp_derivative(const XPoly& p);
GaussRat xp_eval(const XPoly& p, const GaussRat& x);
XPoly xp_monic(const XPoly& p);

// Monic gcd via the Euclidean algorithm (field coefficients).
XPoly xp_gcd(XPoly a, XPoly b);

// Yun squarefree decomposition: p ~ prod_i f_i^{m_i} with f_i squarefree,
// pairwise coprime, m_i strictly increasing. Content (the leading unit) is
// absorbed into the first factor, so only root structure is preserved.
std::vector<std::pair<XPoly, unsigned>> xp_squarefree_decomposition(const XPoly& p);

}  // namespace hankel
