#include "hankel/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hankel {

bool KernelForm::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Scalar& s) { return s.is_zero(); });
}

KernelForm kernel_form(std::vector<Scalar> coeffs) {
    if (coeffs.empty()) throw DomainError("empty kernel form");
    KernelForm f{coeffs.size() - 1, std::move(coeffs)};
    if (f.is_zero()) throw DomainError("zero kernel form");
    if (f.mode() == Mode::fp) {
        // Elimination residues are not coefficients; snap them to zero so
        // the leading coefficient and the degree pattern are meaningful.
        double scale = 0.0;
        for (const auto& c : f.coeffs) scale = std::max(scale, std::abs(c.to_complex()));
        for (auto& c : f.coeffs)
            if (std::abs(c.to_complex()) <= 1e-12 * scale) c = Scalar::fp({0.0, 0.0});
    }
    Scalar lead = Scalar::one(f.mode());
    for (const auto& c : f.coeffs)
        if (!c.is_zero()) {
            lead = c;
            break;
        }
    for (auto& c : f.coeffs) c /= lead;
    return f;
}

namespace roots_detail {

XPoly dehomogenize(const KernelForm& f) {
    // Coefficient of t^e in f(t,1) is coeffs[k - e].
    XPoly p(f.k + 1);
    for (std::size_t e = 0; e <= f.k; ++e) p[e] = f.coeffs[f.k - e].exact_value();
    xp_trim(p);
    return p;
}

std::optional<Rat> rational_nth_root(const Rat& r, unsigned n) {
    if (r == 0) return Rat(0);
    Rat a = r;
    bool neg = a < 0;
    if (neg) {
        if (n % 2 == 0) return std::nullopt;
        a = -a;
    }
    Int num = a.get_num(), den = a.get_den();
    Int rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), n) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), n) == 0) return std::nullopt;
    Rat out = make_rat(rn, rd);
    return neg ? Rat(-out) : out;
}

namespace {

std::optional<Rat> rational_sqrt(const Rat& r) {
    if (r < 0) return std::nullopt;
    return rational_nth_root(r, 2);
}

}  // namespace

std::optional<GaussRat> gauss_sqrt(const GaussRat& z) {
    if (z.is_zero()) return GaussRat();
    if (z.im == 0) {
        if (z.re > 0) {
            auto s = rational_sqrt(z.re);
            if (s) return GaussRat(*s);
            return std::nullopt;
        }
        auto s = rational_sqrt(Rat(-z.re));
        if (s) return GaussRat(Rat(0), *s);
        return std::nullopt;
    }
    // sqrt(x + yi) = u + vi with u^2 = (|z| + x)/2, v = y / (2u).
    auto mag = rational_sqrt(z.norm2());
    if (!mag) return std::nullopt;
    auto u2 = Rat((*mag + z.re) / 2);
    auto u = rational_sqrt(u2);
    if (!u || *u == 0) return std::nullopt;
    Rat v = z.im / (2 * (*u));
    GaussRat out(*u, v);
    if (out * out == z) return out;
    return std::nullopt;
}

namespace {

unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    if (n > 1) result -= result / n;
    return result;
}

// Monic integer cyclotomic polynomial Phi_N as an XPoly.
XPoly cyclotomic_xpoly(unsigned N) {
    // Phi_N = (x^N - 1) / prod_{d|N, d<N} Phi_d, computed over Q.
    XPoly num(N + 1);
    num[0] = GaussRat(Rat(-1));
    num[N] = GaussRat(Rat(1));
    for (unsigned d = 1; d < N; ++d)
        if (N % d == 0) num = xp_divmod(num, cyclotomic_xpoly(d)).first;
    return num;
}

// Binomial pattern t^D = gamma with rational gamma = +-rho^D.
bool try_binomial(const XPoly& g, unsigned mult, std::vector<ExactRoot>& out,
                  unsigned& lcm_order) {
    const std::size_t D = g.size() - 1;
    if (D < 2) return false;
    for (std::size_t i = 1; i + 1 < g.size(); ++i)
        if (!g[i].is_zero()) return false;
    if (!g[0].is_real() || !g.back().is_real()) return false;
    Rat gamma = -(g[0].re / g.back().re);
    if (auto rho = rational_nth_root(gamma, static_cast<unsigned>(D))) {
        lcm_order = lcm_u(lcm_order, static_cast<unsigned>(D));
        for (unsigned j = 0; j < D; ++j)
            out.push_back(ExactRoot{CycRootSpec{static_cast<unsigned>(D), j, *rho}, false, mult});
        return true;
    }
    if (D % 2 == 0) {
        if (auto rho = rational_nth_root(Rat(-gamma), static_cast<unsigned>(D))) {
            // t^D = -rho^D: roots rho * zeta_{2D}^{2j+1}.
            unsigned N = static_cast<unsigned>(2 * D);
            lcm_order = lcm_u(lcm_order, N);
            for (unsigned j = 0; j < D; ++j)
                out.push_back(ExactRoot{CycRootSpec{N, 2 * j + 1, *rho}, false, mult});
            return true;
        }
    }
    return false;
}

// Recognize g == Phi_N: roots are the primitive N-th roots of unity.
bool try_cyclotomic(const XPoly& g, unsigned mult, std::vector<ExactRoot>& out,
                    unsigned& lcm_order) {
    const std::size_t D = g.size() - 1;
    if (D < 1) return false;
    for (const auto& c : g)
        if (!c.is_real()) return false;
    if (!(g.back() == GaussRat(Rat(1)))) return false;
    const unsigned cap = static_cast<unsigned>(2 * D * D + 4);
    for (unsigned N = 1; N <= cap; ++N) {
        if (euler_phi(N) != D) continue;
        if (cyclotomic_xpoly(N) != g) continue;
        lcm_order = lcm_u(lcm_order, N);
        for (unsigned j = 1; j <= N; ++j)
            if (std::gcd(j, N) == 1) out.push_back(ExactRoot{CycRootSpec{N, j % N, Rat(1)}, false, mult});
        return true;
    }
    return false;
}

// Exact roots of one squarefree monic factor; appends to out, returns false
// when the factor is outside the recognizable patterns.
bool roots_of_squarefree_factor(XPoly g, unsigned mult, std::vector<ExactRoot>& out,
                                unsigned& lcm_order) {
    xp_trim(g);
    if (g.size() <= 1) return true;  // constant: no roots
    if (g.size() == 2) {
        out.push_back(ExactRoot{-(g[0] / g[1]), false, mult});
        return true;
    }
    if (try_binomial(g, mult, out, lcm_order)) return true;
    if (try_cyclotomic(g, mult, out, lcm_order)) return true;
    if (g.size() == 3) {  // quadratic formula over Q(i)
        GaussRat a = g[2], b = g[1], c = g[0];
        GaussRat disc = b * b - GaussRat(Rat(4)) * a * c;
        if (auto s = gauss_sqrt(disc)) {
            GaussRat two_a = GaussRat(Rat(2)) * a;
            out.push_back(ExactRoot{(-b + *s) / two_a, false, mult});
            out.push_back(ExactRoot{(-b - *s) / two_a, false, mult});
            return true;
        }
        return false;
    }
    // Strip one rational (real) root by candidate search when the
    // integerized ends stay small enough for trial division, then recurse.
    bool all_real = std::all_of(g.begin(), g.end(), [](const GaussRat& c) { return c.is_real(); });
    if (!all_real) return false;
    Int den(1);
    for (const auto& c : g)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.re.get_den().get_mpz_t());
    std::vector<Int> ic(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        Rat v = g[i].re * den;
        ic[i] = v.get_num();
    }
    auto small_divisors = [](const Int& v) {
        std::vector<long> divs;
        if (!mpz_fits_slong_p(v.get_mpz_t())) return divs;
        long a = std::labs(v.get_si());
        if (a == 0 || a > 1000000L) return divs;
        for (long d = 1; d * d <= a; ++d)
            if (a % d == 0) {
                divs.push_back(d);
                if (d != a / d) divs.push_back(a / d);
            }
        return divs;
    };
    auto nums = small_divisors(ic.front());  // constant term nonzero here
    auto dens = small_divisors(ic.back());
    for (long p : nums)
        for (long q : dens)
            for (int sgn = 1; sgn >= -1; sgn -= 2) {
                GaussRat cand{make_rat(sgn * p, q)};
                if (!xp_eval(g, cand).is_zero()) continue;
                out.push_back(ExactRoot{cand, false, mult});
                XPoly lin{-cand, GaussRat(Rat(1))};
                XPoly quo = xp_monic(xp_divmod(g, lin).first);
                return roots_of_squarefree_factor(std::move(quo), mult, out, lcm_order);
            }
    return false;
}

}  // namespace

ExactRootsResult exact_projective_roots(const KernelForm& f) {
    ExactRootsResult res;
    if (f.mode() != Mode::exact) return res;
    // Multiplicity at (1, 0): leading zero coefficients.
    unsigned mult_inf = 0;
    for (const auto& c : f.coeffs) {
        if (!c.is_zero()) break;
        ++mult_inf;
    }
    if (mult_inf == f.coeffs.size()) throw DomainError("zero form has no roots");
    if (mult_inf > 0) res.roots.push_back(ExactRoot{GaussRat(), true, mult_inf});
    XPoly p = dehomogenize(f);
    // Roots at t = 0.
    unsigned mult_zero = 0;
    while (!p.empty() && p.front().is_zero()) {
        p.erase(p.begin());
        ++mult_zero;
    }
    if (mult_zero > 0) res.roots.push_back(ExactRoot{GaussRat(), false, mult_zero});
    if (p.size() <= 1) {
        res.ok = true;
        return res;
    }
    for (const auto& [factor, mult] : xp_squarefree_decomposition(p)) {
        if (!roots_of_squarefree_factor(factor, mult, res.roots, res.lcm_order)) {
            res.ok = false;
            res.roots.clear();
            return res;
        }
    }
    res.ok = true;
    return res;
}

std::vector<std::complex<double>> companion_eigenvalues(
    std::vector<std::complex<double>> tail) {
    using C = std::complex<double>;
    const std::size_t D = tail.size();
    if (D == 0) return {};
    if (D == 1) return {-tail[0]};
    std::vector<C> H(D * D, C(0.0));
    auto at = [&](std::size_t i, std::size_t j) -> C& { return H[i * D + j]; };
    for (std::size_t i = 1; i < D; ++i) at(i, i - 1) = 1.0;
    for (std::size_t i = 0; i < D; ++i) at(i, D - 1) = -tail[i];
    std::vector<C> eig;
    eig.reserve(D);
    std::size_t m = D - 1;
    const double eps = 1e-14;
    int stall = 0;
    while (true) {
        // Deflate converged trailing eigenvalues.
        while (true) {
            if (m == 0) {
                eig.push_back(at(0, 0));
                std::reverse(eig.begin(), eig.end());
                return eig;
            }
            double sub = std::abs(at(m, m - 1));
            if (sub <= eps * (std::abs(at(m - 1, m - 1)) + std::abs(at(m, m)) + 1e-300)) {
                eig.push_back(at(m, m));
                --m;
                stall = 0;
            } else {
                break;
            }
        }
        // Active block [l, m].
        std::size_t l = m;
        while (l > 0) {
            double sub = std::abs(at(l, l - 1));
            if (sub <= eps * (std::abs(at(l - 1, l - 1)) + std::abs(at(l, l)) + 1e-300)) {
                at(l, l - 1) = 0.0;
                break;
            }
            --l;
        }
        // Wilkinson shift from the trailing 2x2, exceptional shift if stalled.
        C a = at(m - 1, m - 1), b = at(m - 1, m), c = at(m, m - 1), d = at(m, m);
        C tr2 = (a + d) / 2.0;
        C disc = std::sqrt(tr2 * tr2 - (a * d - b * c));
        C mu1 = tr2 + disc, mu2 = tr2 - disc;
        C sigma = (std::abs(mu1 - d) < std::abs(mu2 - d)) ? mu1 : mu2;
        if (++stall % 24 == 0)
            sigma += C(1.5 * std::abs(at(m, m - 1)) + 0.01, 0.37 * std::abs(at(m, m - 1)));
        if (stall > 600) throw DomainError("companion eigenvalue iteration failed to converge");
        for (std::size_t i = l; i <= m; ++i) at(i, i) -= sigma;
        // QR by Givens on the Hessenberg block, then RQ.
        std::vector<double> cs(m - l + 1, 1.0);
        std::vector<C> sn(m - l + 1, 0.0);
        for (std::size_t k = l; k < m; ++k) {
            C x = at(k, k), y = at(k + 1, k);
            double r = std::hypot(std::abs(x), std::abs(y));
            double cc;
            C ss;
            if (r < 1e-300) {
                cc = 1.0;
                ss = 0.0;
            } else if (std::abs(x) < 1e-300) {
                cc = 0.0;
                ss = std::conj(y) / std::abs(y);
            } else {
                cc = std::abs(x) / r;
                ss = (x / std::abs(x)) * std::conj(y) / r;
            }
            cs[k - l] = cc;
            sn[k - l] = ss;
            for (std::size_t j = k; j <= m; ++j) {
                C u = at(k, j), v = at(k + 1, j);
                at(k, j) = cc * u + ss * v;
                at(k + 1, j) = -std::conj(ss) * u + cc * v;
            }
        }
        for (std::size_t k = l; k < m; ++k) {
            double cc = cs[k - l];
            C ss = sn[k - l];
            std::size_t top = std::min(k + 2, m);
            for (std::size_t i = l; i <= top; ++i) {
                C u = at(i, k), v = at(i, k + 1);
                at(i, k) = cc * u + std::conj(ss) * v;
                at(i, k + 1) = -ss * u + cc * v;
            }
        }
        for (std::size_t i = l; i <= m; ++i) at(i, i) += sigma;
    }
}

}  // namespace roots_detail

namespace {

using roots_detail::CycRootSpec;
using roots_detail::ExactRoot;

// zeta_N^power * scale lies in Q(i) exactly when the reduced order divides 4.
std::optional<GaussRat> cyc_root_as_gauss(const CycRootSpec& c) {
    unsigned g = std::gcd(c.power == 0 ? c.N : c.power, c.N);
    unsigned order = c.N / g;
    unsigned pos = (c.power / g) % (order == 0 ? 1 : order);
    switch (order) {
        case 1: return GaussRat(c.scale);
        case 2: return GaussRat(Rat(-c.scale));
        case 4:
            if (pos == 1) return GaussRat(Rat(0), c.scale);
            return GaussRat(Rat(0), Rat(-c.scale));
        default: return std::nullopt;
    }
}

Scalar exact_root_to_scalar(const ExactRoot& r) {
    if (std::holds_alternative<GaussRat>(r.a)) return Scalar::exact(std::get<GaussRat>(r.a));
    const auto& cyc = std::get<CycRootSpec>(r.a);
    if (auto g = cyc_root_as_gauss(cyc)) return Scalar::exact(*g);
    double theta = 2.0 * M_PI * static_cast<double>(cyc.power) / static_cast<double>(cyc.N);
    std::complex<double> z(std::cos(theta), std::sin(theta));
    return Scalar::fp(to_double(cyc.scale) * z);
}

struct FloatRootData {
    unsigned mult_inf = 0;
    std::vector<std::pair<std::complex<double>, unsigned>> finite;  // clustered
};

FloatRootData float_roots(const KernelForm& f, double tol) {
    FloatRootData out;
    std::vector<std::complex<double>> c(f.coeffs.size());
    double maxabs = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = f.coeffs[i].to_complex();
        maxabs = std::max(maxabs, std::abs(c[i]));
    }
    if (maxabs == 0.0) throw DomainError("zero form has no roots");
    const double zero_thresh = 1e-12 * maxabs;
    std::size_t lead = 0;
    while (lead < c.size() && std::abs(c[lead]) <= zero_thresh) ++lead;
    out.mult_inf = static_cast<unsigned>(lead);
    // p(t) = f(t,1): ascending coefficients c[k-e].
    std::vector<std::complex<double>> p;
    for (std::size_t e = 0; e + lead < c.size(); ++e) p.push_back(c[c.size() - 1 - e]);
    while (!p.empty() && std::abs(p.back()) <= zero_thresh) p.pop_back();
    // Structural roots at t = 0 (vanishing low-order coefficients) are
    // stripped exactly; a multiple zero eigenvalue would otherwise scatter
    // into spurious simple roots of magnitude around eps^(1/mult).
    unsigned mult_zero = 0;
    while (!p.empty() && std::abs(p.front()) <= zero_thresh) {
        p.erase(p.begin());
        ++mult_zero;
    }
    if (mult_zero > 0) out.finite.emplace_back(std::complex<double>(0.0, 0.0), mult_zero);
    std::vector<std::complex<double>> roots;
    if (p.size() > 1) {
        std::complex<double> leadc = p.back();
        std::vector<std::complex<double>> tail(p.begin(), p.end() - 1);
        for (auto& v : tail) v /= leadc;
        roots = roots_detail::companion_eigenvalues(std::move(tail));
    }
    // Cluster near-equal roots.
    std::sort(roots.begin(), roots.end(), [](const auto& x, const auto& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    });
    for (std::size_t i = 0; i < roots.size();) {
        std::size_t j = i + 1;
        std::complex<double> sum = roots[i];
        while (j < roots.size() &&
               std::abs(roots[j] - roots[i]) <= tol * std::max(1.0, std::abs(roots[i]))) {
            sum += roots[j];
            ++j;
        }
        out.finite.emplace_back(sum / static_cast<double>(j - i), static_cast<unsigned>(j - i));
        i = j;
    }
    return out;
}

}  // namespace

bool is_squarefree(const KernelForm& f, double tol) {
    if (f.coeffs.empty() || f.is_zero()) throw DomainError("squarefree test on zero form");
    if (f.mode() == Mode::exact) {
        unsigned mult_inf = 0;
        for (const auto& c : f.coeffs) {
            if (!c.is_zero()) break;
            ++mult_inf;
        }
        if (mult_inf > 1) return false;
        XPoly p = roots_detail::dehomogenize(f);
        if (p.size() <= 1) return true;  // only the root at infinity
        XPoly g = xp_gcd(p, xp_derivative(p));
        return xp_degree(g) <= 0;
    }
    if (f.mode() == Mode::fp) {
        auto data = float_roots(f, tol);
        if (data.mult_inf > 1) return false;
        for (const auto& [root, mult] : data.finite)
            if (mult > 1) return false;
        return true;
    }
    throw ModeError("squarefree test needs exact or float form");
}

std::vector<ProjectiveRoot> projective_roots(const KernelForm& f, double tol) {
    if (f.coeffs.empty() || f.is_zero()) throw DomainError("root extraction on zero form");
    std::vector<ProjectiveRoot> out;
    if (f.mode() == Mode::exact) {
        auto ex = roots_detail::exact_projective_roots(f);
        if (ex.ok) {
            for (const auto& r : ex.roots) {
                if (r.at_infinity)
                    out.push_back({Scalar::exact(1), Scalar::exact(0), r.multiplicity});
                else
                    out.push_back({exact_root_to_scalar(r),
                                   std::holds_alternative<GaussRat>(r.a)
                                       ? Scalar::exact(1)
                                       : Scalar::fp({1.0, 0.0}),
                                   r.multiplicity});
            }
            // Keep modes per root consistent (a and b in the same mode).
            for (auto& r : out)
                if (r.a.mode() == Mode::fp && r.b.mode() == Mode::exact)
                    r.b = Scalar::fp(r.b.to_complex());
            return out;
        }
    }
    // Float route (also the fallback for exact forms with unrecognized roots).
    KernelForm g = f;
    if (g.mode() == Mode::exact)
        for (auto& c : g.coeffs) c = Scalar::fp(c.to_complex());
    auto data = float_roots(g, tol);
    if (data.mult_inf > 0)
        out.push_back({Scalar::fp({1.0, 0.0}), Scalar::fp({0.0, 0.0}), data.mult_inf});
    for (const auto& [root, mult] : data.finite)
        out.push_back({Scalar::fp(root), Scalar::fp({1.0, 0.0}), mult});
    return out;
}

}  // namespace hankel
