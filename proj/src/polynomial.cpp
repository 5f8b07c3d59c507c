#include "hankel/polynomial.hpp"

#include <algorithm>

namespace hankel {

void xp_trim(XPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

XPoly xp_add(const XPoly& a, const XPoly& b) {
    XPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
    }
    xp_trim(r);
    return r;
}

XPoly xp_sub(const XPoly& a, const XPoly& b) {
    XPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    xp_trim(r);
    return r;
}

XPoly xp_mul(const XPoly& a, const XPoly& b) {
    if (a.empty() || b.empty()) return {};
    XPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    xp_trim(r);
    return r;
}

XPoly xp_scale(const XPoly& a, const GaussRat& c) {
    if (c.is_zero()) return {};
    XPoly r = a;
    for (auto& v : r) v *= c;
    return r;
}

std::pair<XPoly, XPoly> xp_divmod(const XPoly& a, const XPoly& b) {
    if (b.empty()) throw DomainError("polynomial division by zero");
    XPoly rem = a, quo;
    if (a.size() >= b.size()) quo.assign(a.size() - b.size() + 1, GaussRat());
    const GaussRat& lead = b.back();
    while (rem.size() >= b.size()) {
        GaussRat c = rem.back() / lead;
        std::size_t shift = rem.size() - b.size();
        quo[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= c * b[i];
        rem.pop_back();  // leading term cancels exactly
        xp_trim(rem);
        if (rem.size() < b.size()) break;
    }
    xp_trim(quo);
    return {quo, rem};
}

XPoly xp_derivative(const XPoly& p) {
    if (p.size() <= 1) return {};
    XPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * GaussRat(Rat(static_cast<long>(i)));
    xp_trim(d);
    return d;
}

GaussRat xp_eval(const XPoly& p, const GaussRat& x) {
    GaussRat acc;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

XPoly xp_monic(const XPoly& p) {
    if (p.empty()) return p;
    return xp_scale(p, GaussRat(Rat(1)) / p.back());
}

XPoly xp_gcd(XPoly a, XPoly b) {
    xp_trim(a);
    xp_trim(b);
    while (!b.empty()) {
        XPoly r = xp_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
        if (!b.empty()) b = xp_monic(b);  // keeps coefficient growth tame
    }
    return a.empty() ? a : xp_monic(a);
}

std::vector<std::pair<XPoly, unsigned>> xp_squarefree_decomposition(const XPoly& p) {
    std::vector<std::pair<XPoly, unsigned>> out;
    if (p.size() <= 1) return out;
    // Yun's algorithm over characteristic zero.
    XPoly dp = xp_derivative(p);
    XPoly g = xp_gcd(p, dp);
    XPoly w = xp_divmod(p, g).first;
    XPoly y = xp_divmod(dp, g).first;
    unsigned mult = 1;
    while (xp_degree(w) > 0) {
        XPoly z = xp_sub(y, xp_derivative(w));
        XPoly f = xp_gcd(w, z);
        if (xp_degree(f) > 0) out.emplace_back(xp_monic(f), mult);
        w = xp_divmod(w, f).first;
        y = xp_divmod(z, f).first;
        ++mult;
    }
    return out;
}

}  // namespace hankel
