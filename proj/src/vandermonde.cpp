#include "hankel/vandermonde.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hankel/catalecticant.hpp"
#include "hankel/linalg.hpp"

namespace hankel {

const char* vrank_case_name(VrankCase c) {
    switch (c) {
        case VrankCase::full: return "full";
        case VrankCase::squarefree: return "squarefree";
        case VrankCase::multiple: return "multiple";
    }
    return "?";
}

std::size_t border_vrank(const HankelTensor& H) {
    const std::size_t d = H.degree();
    return mat_rank(catalecticant(to_binary_form(H), d / 2).mat);
}

KernelForm unique_kernel_form(const BinaryForm& b, std::size_t r) {
    auto basis = kernel_basis(catalecticant(b, r).mat);
    if (basis.size() != 1)
        throw InvariantError("kernel of C_{d-r,r} expected one-dimensional, got dim " +
                             std::to_string(basis.size()));
    return kernel_form(basis.front());
}

VrankResult vrank(const HankelTensor& H) {
    const std::size_t d = H.degree();
    if (H.is_zero()) return {0, 0, VrankCase::full};
    std::size_t r = border_vrank(H);
    if (d % 2 == 0 && r == d / 2 + 1) return {r, r, VrankCase::full};
    KernelForm f = unique_kernel_form(to_binary_form(H), r);
    if (is_squarefree(f)) return {r, r, VrankCase::squarefree};
    return {r, d - r + 2, VrankCase::multiple};
}

KernelForm generic_kernel_form(const BinaryForm& b, std::size_t k, std::uint64_t seed) {
    auto basis = kernel_basis(catalecticant(b, k).mat);
    if (basis.empty()) throw DomainError("kernel of C_{d-k,k} is trivial");
    const Mode mode = b.mode();
    const std::size_t len = basis.front().size();
    auto try_form = [&](const std::vector<Scalar>& v) -> bool {
        return std::any_of(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); });
    };
    auto admissible = [&](const std::vector<Scalar>& v, KernelForm& out) -> bool {
        if (!try_form(v)) return false;
        KernelForm f = kernel_form(v);
        if (!is_squarefree(f)) return false;
        out = std::move(f);
        return true;
    };
    KernelForm out;
    for (const auto& v : basis)
        if (admissible(v, out)) return out;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            std::vector<Scalar> v(len, Scalar::zero(mode));
            for (std::size_t t = 0; t < len; ++t) v[t] = basis[i][t] - basis[j][t];
            if (admissible(v, out)) return out;
            for (std::size_t t = 0; t < len; ++t) v[t] = basis[i][t] + basis[j][t];
            if (admissible(v, out)) return out;
        }
    SplitMix64 rng(seed ^ 0x9d2c5680cafef00dULL);
    for (int draw = 0; draw < 64; ++draw) {
        long bound = 2 + draw / 8;  // widening coefficient range
        std::vector<Scalar> v(len, Scalar::zero(mode));
        for (const auto& bvec : basis) {
            long c = rng.in_range(-bound, bound);
            if (c == 0) continue;
            Scalar cs = mode == Mode::exact ? Scalar::exact(c)
                                            : Scalar::fp({static_cast<double>(c), 0.0});
            for (std::size_t t = 0; t < len; ++t) v[t] += cs * bvec[t];
        }
        if (admissible(v, out)) return out;
    }
    throw NoSquarefreeKernelError("no squarefree kernel combination found after 64 draws");
}

namespace {

// Exact lambda solve over a cyclotomic field: (d+1) x k transposed
// Vandermonde system, Gaussian elimination with a consistency check.
std::vector<Cyc> solve_lambdas_cyc(const std::vector<std::pair<Cyc, Cyc>>& nodes,
                                   const std::vector<Cyc>& rhs, const CycloField& F) {
    const std::size_t k = nodes.size();
    const std::size_t rows = rhs.size();
    const std::size_t w = k + 1;
    std::vector<Cyc> m(rows * w, Cyc(F));
    for (std::size_t i = 0; i < k; ++i) {
        const auto& [a, b] = nodes[i];
        Cyc apow = Cyc::from_rat(F, Rat(1));
        std::vector<Cyc> acol(rows, Cyc(F));
        for (std::size_t j = 0; j < rows; ++j) {
            acol[j] = apow;
            apow = apow * a;
        }
        Cyc bpow = Cyc::from_rat(F, Rat(1));
        for (std::size_t j = rows; j-- > 0;) {
            m[j * w + i] = acol[j] * bpow;
            bpow = bpow * b;
        }
    }
    for (std::size_t j = 0; j < rows; ++j) m[j * w + k] = rhs[j];
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < w && r < rows; ++c) {
        std::size_t p = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m[i * w + c].is_zero()) {
                p = i;
                break;
            }
        if (p == rows) continue;
        for (std::size_t j = 0; j < w; ++j) std::swap(m[r * w + j], m[p * w + j]);
        Cyc inv = m[r * w + c].inv();
        for (std::size_t j = c; j < w; ++j) m[r * w + j] = m[r * w + j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            Cyc f = m[i * w + c];
            if (f.is_zero()) continue;
            for (std::size_t j = c; j < w; ++j) m[i * w + j] = m[i * w + j] - f * m[r * w + j];
        }
        pivots.push_back(c);
        ++r;
    }
    for (auto c : pivots)
        if (c == k) throw NoSolutionError("exact lambda system inconsistent", 1.0);
    std::vector<Cyc> lam(k, Cyc(F));
    for (std::size_t i = 0; i < pivots.size(); ++i) lam[pivots[i]] = m[i * w + k];
    return lam;
}

std::vector<std::complex<double>> solve_lambdas_float(
    const std::vector<std::pair<std::complex<double>, std::complex<double>>>& nodes,
    const std::vector<std::complex<double>>& rhs) {
    using C = std::complex<double>;
    const std::size_t k = nodes.size();
    const std::size_t rows = rhs.size();
    std::vector<C> m(rows * k);
    for (std::size_t i = 0; i < k; ++i) {
        auto [a, b] = nodes[i];
        std::vector<C> apow(rows);
        C ap = 1.0;
        for (std::size_t j = 0; j < rows; ++j) {
            apow[j] = ap;
            ap *= a;
        }
        C bp = 1.0;
        for (std::size_t j = rows; j-- > 0;) {
            m[j * k + i] = apow[j] * bp;
            bp *= b;
        }
    }
    // Column powers of the nodes span many orders of magnitude; equilibrate
    // so one pivot threshold makes sense, then unscale the solution.
    std::vector<double> cscale(k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < rows; ++j) cscale[i] = std::max(cscale[i], std::abs(m[j * k + i]));
        if (cscale[i] == 0.0) cscale[i] = 1.0;
        for (std::size_t j = 0; j < rows; ++j) m[j * k + i] /= cscale[i];
    }
    std::vector<C> y = rhs;
    // Partial-pivoted elimination; consistency is the callers' business
    // (float roots make the overdetermined system only nearly consistent).
    std::vector<std::size_t> pivot_row(k, rows);
    std::size_t r = 0;
    for (std::size_t c = 0; c < k && r < rows; ++c) {
        std::size_t best = rows;
        double mag = 1e-12;
        for (std::size_t i = r; i < rows; ++i) {
            double v = std::abs(m[i * k + c]);
            if (v > mag) {
                mag = v;
                best = i;
            }
        }
        if (best == rows) continue;
        if (best != r) {
            for (std::size_t j = 0; j < k; ++j) std::swap(m[r * k + j], m[best * k + j]);
            std::swap(y[r], y[best]);
        }
        C inv = 1.0 / m[r * k + c];
        for (std::size_t j = c; j < k; ++j) m[r * k + j] *= inv;
        y[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            C f = m[i * k + c];
            if (f == C(0.0)) continue;
            for (std::size_t j = c; j < k; ++j) m[i * k + j] -= f * m[r * k + j];
            y[i] -= f * y[r];
        }
        pivot_row[c] = r;
        ++r;
    }
    std::vector<C> lam(k, C(0.0));
    for (std::size_t c = 0; c < k; ++c)
        if (pivot_row[c] != rows) lam[c] = y[pivot_row[c]] / cscale[c];
    return lam;
}

}  // namespace

std::vector<Scalar> solve_lambdas(const std::vector<ProjectiveRoot>& roots, const BinaryForm& b,
                                  double tol) {
    for (const auto& r : roots)
        if (r.multiplicity != 1) throw DomainError("lambda solve needs simple roots");
    bool exact = b.mode() == Mode::exact &&
                 std::all_of(roots.begin(), roots.end(), [](const ProjectiveRoot& r) {
                     return r.a.mode() == Mode::exact && r.b.mode() == Mode::exact;
                 });
    if (exact) {
        const CycloField& F = CycloField::get(4);
        std::vector<std::pair<Cyc, Cyc>> nodes;
        for (const auto& r : roots)
            nodes.emplace_back(Cyc::from_gauss(F, r.a.exact_value()),
                               Cyc::from_gauss(F, r.b.exact_value()));
        std::vector<Cyc> rhs;
        for (const auto& h : b.coeffs) rhs.push_back(Cyc::from_gauss(F, h.exact_value()));
        auto lam = solve_lambdas_cyc(nodes, rhs, F);
        std::vector<Scalar> out;
        for (const auto& l : lam) {
            auto g = l.to_gauss();
            if (!g) throw InvariantError("lambda left the Gaussian subfield");
            out.push_back(Scalar::exact(*g));
        }
        return out;
    }
    std::vector<std::pair<std::complex<double>, std::complex<double>>> nodes;
    for (const auto& r : roots) nodes.emplace_back(r.a.to_complex(), r.b.to_complex());
    std::vector<std::complex<double>> rhs;
    double hscale = 1.0;
    for (const auto& h : b.coeffs) {
        rhs.push_back(h.to_complex());
        hscale = std::max(hscale, std::abs(rhs.back()));
    }
    auto lam = solve_lambdas_float(nodes, rhs);
    // Residual check at the caller-visible tolerance (0^0 = 1 powers).
    auto cpow = [](std::complex<double> z, std::size_t e) {
        std::complex<double> acc = 1.0;
        while (e--) acc *= z;
        return acc;
    };
    double res = 0.0;
    for (std::size_t j = 0; j < rhs.size(); ++j) {
        std::complex<double> acc = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i)
            acc += lam[i] * cpow(nodes[i].first, j) * cpow(nodes[i].second, b.d - j);
        res = std::max(res, std::abs(acc - rhs[j]));
    }
    if (res > tol * hscale) throw NoSolutionError("lambda system residual too large", res);
    std::vector<Scalar> out;
    for (auto l : lam) out.push_back(Scalar::fp(l));
    return out;
}

namespace {

unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

struct ExactNodes {
    const CycloField* F = nullptr;
    std::vector<std::pair<Cyc, Cyc>> nodes;
};

// The kernel vector (v_0..v_k) of C_{d-k,k} satisfies
// sum_j v_j a^j b^{k-j} = 0 at every node (a, b), which is the form built
// on the REVERSED coefficients. Under the descending x-power convention
// the decomposition nodes are therefore the swapped classical roots
// (a, b) -> (b, a); canonically, a finite root t becomes the node (1/t, 1),
// a root at 0 the node at infinity and vice versa.
roots_detail::ExactRootsResult roots_to_nodes(const roots_detail::ExactRootsResult& ex) {
    roots_detail::ExactRootsResult out;
    out.ok = ex.ok;
    out.lcm_order = ex.lcm_order;
    for (const auto& r : ex.roots) {
        roots_detail::ExactRoot node;
        node.multiplicity = r.multiplicity;
        if (r.at_infinity) {
            node.a = GaussRat();  // node (0, 1)
        } else if (std::holds_alternative<GaussRat>(r.a)) {
            const GaussRat& t = std::get<GaussRat>(r.a);
            if (t.is_zero()) {
                node.at_infinity = true;  // node (1, 0)
            } else {
                node.a = GaussRat(Rat(1)) / t;
            }
        } else {
            const auto& c = std::get<roots_detail::CycRootSpec>(r.a);
            roots_detail::CycRootSpec inv{c.N, static_cast<unsigned>((c.N - c.power % c.N) % c.N),
                                          Rat(1) / c.scale};
            node.a = inv;
        }
        out.roots.push_back(std::move(node));
    }
    return out;
}

// Lift recognized exact nodes into one cyclotomic field (4 always divides
// the order so Gaussian rationals embed).
ExactNodes lift_roots(const roots_detail::ExactRootsResult& ex) {
    ExactNodes out;
    unsigned N = lcm_u(4, ex.lcm_order);
    const CycloField& F = CycloField::get(N);
    out.F = &F;
    for (const auto& r : ex.roots) {
        if (r.at_infinity) {
            out.nodes.emplace_back(Cyc::from_rat(F, Rat(1)), Cyc(F));
            continue;
        }
        if (std::holds_alternative<GaussRat>(r.a)) {
            out.nodes.emplace_back(Cyc::from_gauss(F, std::get<GaussRat>(r.a)),
                                   Cyc::from_rat(F, Rat(1)));
        } else {
            const auto& c = std::get<roots_detail::CycRootSpec>(r.a);
            Cyc z = Cyc::zeta(F, static_cast<long>(c.power) * static_cast<long>(N / c.N));
            out.nodes.emplace_back(Cyc::from_rat(F, c.scale) * z, Cyc::from_rat(F, Rat(1)));
        }
    }
    return out;
}

Scalar cyc_to_scalar(const Cyc& v) {
    auto g = v.to_gauss();
    if (g) return Scalar::exact(*g);
    return Scalar::fp(v.to_complex());
}

}  // namespace

VandermondeDecomposition decompose(const HankelTensor& H, std::uint64_t seed) {
    VandermondeDecomposition dec;
    dec.n = H.n;
    dec.m = H.m;
    const std::size_t d = H.degree();
    if (H.is_zero()) {
        dec.claimed_rank = 0;
        dec.unique = false;
        dec.exact = H.mode() == Mode::exact;
        if (dec.exact) dec.cyc_terms.emplace();  // exact empty reconstruction
        return dec;
    }
    VrankResult vr = vrank(H);
    const std::size_t k = vr.vrank;
    BinaryForm b = to_binary_form(H);
    KernelForm g = (vr.kase == VrankCase::squarefree)
                       ? unique_kernel_form(b, vr.r)
                       : generic_kernel_form(b, k, seed);
    dec.claimed_rank = k;
    dec.unique = (2 * vr.r <= d + 1) && vr.kase == VrankCase::squarefree;

    bool done = false;
    if (H.mode() == Mode::exact) {
        auto ex = roots_detail::exact_projective_roots(g);
        if (ex.ok) {
            std::size_t count = 0;
            bool simple = true;
            for (const auto& r : ex.roots) {
                count += r.multiplicity;
                if (r.multiplicity != 1) simple = false;
            }
            if (simple && count == k) {
                auto lifted = lift_roots(roots_to_nodes(ex));
                const CycloField& F = *lifted.F;
                std::vector<Cyc> rhs;
                for (const auto& hc : H.h) rhs.push_back(Cyc::from_gauss(F, hc.exact_value()));
                auto lam = solve_lambdas_cyc(lifted.nodes, rhs, F);
                std::vector<CycTerm> terms;
                for (std::size_t i = 0; i < k; ++i)
                    terms.push_back(CycTerm{lam[i], lifted.nodes[i].first, lifted.nodes[i].second});
                dec.cyc_terms = std::move(terms);
                dec.exact = true;
                for (const auto& t : *dec.cyc_terms)
                    dec.terms.push_back(VandermondeTerm{cyc_to_scalar(t.lambda),
                                                        cyc_to_scalar(t.a), cyc_to_scalar(t.b)});
                // Mixed exact/float scalars within one term are awkward for
                // callers; align each term on one mode.
                for (auto& t : dec.terms) {
                    if (t.lambda.mode() != t.a.mode() || t.a.mode() != t.b.mode()) {
                        t.lambda = Scalar::fp(t.lambda.to_complex());
                        t.a = Scalar::fp(t.a.to_complex());
                        t.b = Scalar::fp(t.b.to_complex());
                    }
                }
                // All-Gaussian decompositions do not need the payload.
                bool all_gauss = std::all_of(dec.terms.begin(), dec.terms.end(),
                                             [](const VandermondeTerm& t) {
                                                 return t.lambda.mode() == Mode::exact;
                                             });
                if (all_gauss) dec.cyc_terms.reset();
                done = true;
            }
        }
    }
    if (!done) {
        // Float route; the root -> node swap as above. End coefficients
        // that vanish give the nodes (0,1) and (1,0) directly, keeping the
        // companion solve away from zero roots.
        double cscale = 0.0;
        for (const auto& c : g.coeffs) cscale = std::max(cscale, std::abs(c.to_complex()));
        auto coeff_zero = [&](const Scalar& c) {
            return c.mode() == Mode::exact ? c.is_zero()
                                           : std::abs(c.to_complex()) <= 1e-12 * cscale;
        };
        std::size_t lead = 0, trail = 0;
        while (lead < g.coeffs.size() && coeff_zero(g.coeffs[lead])) ++lead;
        while (trail + lead < g.coeffs.size() &&
               coeff_zero(g.coeffs[g.coeffs.size() - 1 - trail]))
            ++trail;
        std::vector<std::pair<std::complex<double>, std::complex<double>>> nodes;
        for (std::size_t t = 0; t < lead; ++t) nodes.emplace_back(0.0, 1.0);   // root (1,0)
        for (std::size_t t = 0; t < trail; ++t) nodes.emplace_back(1.0, 0.0);  // root (0,1)
        if (lead + trail < g.coeffs.size() && g.coeffs.size() - lead - trail > 1) {
            KernelForm mid{g.coeffs.size() - lead - trail - 1,
                           std::vector<Scalar>(g.coeffs.begin() + lead,
                                               g.coeffs.end() - trail)};
            auto roots = projective_roots(mid, 1e-9);
            for (const auto& r : roots) {
                if (r.multiplicity != 1)
                    throw InvariantError("generic kernel form produced a repeated root");
                std::complex<double> a = r.a.to_complex(), b = r.b.to_complex();
                if (std::abs(a) <= 1e-9 * std::max(1.0, std::abs(b)))
                    nodes.emplace_back(1.0, 0.0);
                else
                    nodes.emplace_back(b / a, 1.0);
            }
        }
        if (nodes.size() != k) throw InvariantError("root count disagrees with the rank");
        std::vector<std::complex<double>> rhs;
        double hscale = 1.0;
        for (const auto& hc : H.h) {
            rhs.push_back(hc.to_complex());
            hscale = std::max(hscale, std::abs(rhs.back()));
        }
        auto lam = solve_lambdas_float(nodes, rhs);
        for (std::size_t i = 0; i < k; ++i)
            dec.terms.push_back(VandermondeTerm{Scalar::fp(lam[i]), Scalar::fp(nodes[i].first),
                                                Scalar::fp(nodes[i].second)});
        dec.exact = false;
    }
    for (const auto& t : dec.terms)
        if (t.lambda.is_zero()) throw InvariantError("zero lambda in a rank decomposition");
    // Verify the reconstruction before handing the result out.
    HankelTensor R = reconstruct(dec);
    if (dec.exact) {
        if (!tensors_equal(dense(R), dense(H), 0.0))
            throw InvariantError("exact decomposition failed to reconstruct its input");
    } else {
        double hscale = 1.0;
        for (const auto& hc : H.h) hscale = std::max(hscale, std::abs(hc.to_complex()));
        if (!tensors_equal(dense(R), dense(H), 1e-9 * hscale))
            throw InvariantError("decomposition reconstruction residual above tolerance");
    }
    return dec;
}

}  // namespace hankel
