#include "hankel/rank_relations.hpp"

#include <algorithm>

#include "hankel/catalecticant.hpp"
#include "hankel/koszul.hpp"
#include "hankel/linalg.hpp"

namespace hankel {

const char* rank_case_name(RankCase c) {
    switch (c) {
        case RankCase::even_i: return "even_i";
        case RankCase::even_ii: return "even_ii";
        case RankCase::odd_i: return "odd_i";
        case RankCase::odd_ii: return "odd_ii";
        case RankCase::odd_generic_bounds: return "odd_generic_bounds";
        case RankCase::cubic_generic: return "cubic_generic";
        case RankCase::cubic_unresolved: return "cubic_unresolved";
    }
    return "?";
}

std::size_t generic_vrank(std::size_t n, std::size_t m) {
    if (n < 2 || m < 1) throw DimensionError("generic_vrank needs n >= 2, m >= 1");
    return ((n - 1) * m + 1 + 1) / 2;
}

std::pair<std::size_t, std::size_t> generic_odd_profile(std::size_t n, std::size_t m) {
    if (m % 2 == 0) throw DomainError("odd-order profile needs odd m");
    if (n < 2) throw DimensionError("needs n >= 2");
    const std::size_t m0 = m / 2;
    return {m0 * (n - 1) + (n + 1) / 2, m0 * (n - 1) + 1};
}

namespace {

void chain_check(const RankReport& rep) {
    auto le = [](const Interval& a, const Interval& b) { return a.lo <= b.lo && a.hi <= b.hi; };
    Interval v{rep.vrank, rep.vrank};
    if (!(le(rep.brank, rep.cp_rank) && le(rep.cp_rank, rep.sym_rank) && le(rep.sym_rank, v) &&
          le(rep.brank, rep.sym_brank) && le(rep.sym_brank, rep.sym_rank)))
        throw InvariantError("rank chain violated in a report");
    for (const Interval* iv : {&rep.cp_rank, &rep.sym_rank, &rep.brank, &rep.sym_brank})
        if (iv->lo > iv->hi) throw InvariantError("empty interval in a report");
}

void all_equal(RankReport& rep, std::size_t r) {
    rep.vrank = r;
    rep.brank_V = r;
    rep.cp_rank = rep.sym_rank = rep.brank = rep.sym_brank = Interval{r, r};
}

}  // namespace

RankReport classify(const HankelTensor& H) {
    RankReport rep;
    const std::size_t d = H.degree();
    const std::size_t m = H.m, n = H.n;
    if (H.is_zero()) {
        all_equal(rep, 0);
        rep.kase = m % 2 == 0 ? RankCase::even_i : RankCase::odd_i;
        rep.certificates.push_back({"all", "zero tensor", "every generating coefficient is zero"});
        chain_check(rep);
        return rep;
    }
    VrankResult vr = vrank(H);
    const std::size_t r = vr.r;
    const std::size_t s = d / 2;
    rep.vrank = vr.vrank;
    rep.brank_V = r;
    rep.certificates.push_back(
        {"brank_V", "binary-form border rank (middle catalecticant)",
         "rank of the middle catalecticant = " + std::to_string(r)});

    const std::size_t m0 = m / 2;
    const std::size_t flat_l = (n - 1) * m0;
    auto flat_rank = [&]() { return mat_rank(flatten_reduced(H).mat); };

    if (m % 2 == 0) {
        if (vr.kase != VrankCase::multiple) {
            all_equal(rep, r);
            rep.kase = RankCase::even_i;
            rep.certificates.push_back(
                {"all", "even-order rank collapse",
                 vr.kase == VrankCase::full ? "r = s + 1 (full middle catalecticant)"
                                            : "kernel form is squarefree"});
        } else {
            rep.kase = RankCase::even_ii;
            rep.brank = rep.sym_brank = Interval{r, r};
            rep.cp_rank = rep.sym_rank = Interval{r, d - r + 2};
            rep.certificates.push_back({"brank", "even-order rank collapse, multiple-root branch",
                                        "kernel form has a repeated root; flattening pins the "
                                        "border ranks at r"});
        }
        chain_check(rep);
        return rep;
    }

    // Odd order. The collapse theorems need r <= 1 + (n-1) * m0.
    const bool gate = r <= 1 + flat_l;
    const bool cubic = m == 3;
    if (cubic) {
        const unsigned p = static_cast<unsigned>(n / 2);
        const std::size_t target = (3 * n - 1) / 2;
        const std::size_t kr = koszul_rank(Order3::from_hankel(H), p);
        const std::uint64_t denom = binomial(static_cast<unsigned>(n - 1), p);
        const std::size_t kbound = static_cast<std::size_t>((kr + denom - 1) / denom);
        const bool koszul_cond = kr >= target * denom;
        const bool cat_cond = r == s + 1;
        const bool root_cond = (n % 2 == 1) || vr.kase == VrankCase::squarefree;
        rep.certificates.push_back({"brank", "exterior-power flattening bound",
                                    "rank of the degree-" + std::to_string(p) +
                                        " wedge flattening = " + std::to_string(kr) +
                                        ", bound " + std::to_string(kbound)});
        if (koszul_cond && cat_cond && root_cond) {
            all_equal(rep, target);
            rep.kase = RankCase::cubic_generic;
            rep.certificates.push_back(
                {"all", "generic cubic collapse",
                 "wedge flattening bound meets the V-rank at " + std::to_string(target)});
            chain_check(rep);
            return rep;
        }
        if (!gate) {
            // Bounds only, Koszul-sharpened.
            std::size_t flo = std::max(flat_rank(), kbound);
            rep.kase = RankCase::cubic_unresolved;
            rep.brank = Interval{flo, std::min(r, rep.vrank)};
            rep.sym_brank = Interval{flo, std::min(r, rep.vrank)};
            rep.cp_rank = Interval{flo, rep.vrank};
            rep.sym_rank = Interval{flo, rep.vrank};
            rep.certificates.push_back({"brank", "flattening lower bound",
                                        "reduced flattening rank = " + std::to_string(flo)});
            chain_check(rep);
            return rep;
        }
    }
    if (gate) {
        if (vr.kase == VrankCase::squarefree || vr.kase == VrankCase::full) {
            all_equal(rep, r);
            rep.kase = RankCase::odd_i;
            rep.certificates.push_back(
                {"all", "odd-order rank collapse", "kernel form is squarefree and r <= 1 + l"});
        } else {
            rep.kase = RankCase::odd_ii;
            rep.brank = rep.sym_brank = Interval{r, r};
            rep.cp_rank = rep.sym_rank = Interval{r, d - r + 2};
            rep.certificates.push_back(
                {"brank", "odd-order rank collapse, multiple-root branch",
                 "kernel form has a repeated root; flattening pins the border ranks at r"});
        }
        chain_check(rep);
        return rep;
    }
    // Odd order, generic regime: honest bounds only.
    std::size_t flo = flat_rank();
    rep.kase = RankCase::odd_generic_bounds;
    rep.brank = Interval{flo, std::min(r, rep.vrank)};
    rep.sym_brank = Interval{flo, std::min(r, rep.vrank)};
    rep.cp_rank = Interval{flo, rep.vrank};
    rep.sym_rank = Interval{flo, rep.vrank};
    rep.certificates.push_back({"brank", "flattening lower bound",
                                "rank of the reduced flattening C_{d-l,l} = " +
                                    std::to_string(flo) + " with l = " + std::to_string(flat_l)});
    chain_check(rep);
    return rep;
}

}  // namespace hankel
