#include <doctest.h>

#include "hankel/catalecticant.hpp"
#include "hankel/koszul.hpp"
#include "hankel/linalg.hpp"
#include "hankel/rank_relations.hpp"

using namespace hankel;

TEST_CASE("generic V-rank formula") {
    CHECK(generic_vrank(3, 3) == 4);
    CHECK(generic_vrank(3, 2) == 3);
    CHECK(generic_vrank(2, 3) == 2);
    CHECK(generic_vrank(2, 5) == 3);
    CHECK(generic_vrank(5, 4) == 9);
    CHECK_THROWS_AS(generic_vrank(1, 2), DimensionError);
}

TEST_CASE("generic odd profile") {
    CHECK(generic_odd_profile(4, 5) == std::make_pair<std::size_t, std::size_t>(8, 7));
    CHECK(generic_odd_profile(2, 3) == std::make_pair<std::size_t, std::size_t>(2, 2));
    CHECK(generic_odd_profile(3, 3) == std::make_pair<std::size_t, std::size_t>(4, 3));
    CHECK_THROWS_AS(generic_odd_profile(3, 4), DomainError);
    // cross-check against the generic V-rank formula
    for (std::size_t n = 2; n <= 6; ++n)
        for (std::size_t m = 3; m <= 7; m += 2)
            CHECK(generic_odd_profile(n, m).first == generic_vrank(n, m));
}

TEST_CASE("generic even-order instances collapse to one value") {
    SplitMix64 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        HankelTensor H = random_hankel(3, 2, rng.next(), 999);
        RankReport rep = classify(H);
        CHECK(rep.kase == RankCase::even_i);
        CHECK(rep.vrank == 3);
        CHECK(rep.brank_V == 3);
        for (const Interval* iv : {&rep.cp_rank, &rep.sym_rank, &rep.brank, &rep.sym_brank}) {
            CHECK(iv->is_point());
            CHECK(iv->lo == 3);
        }
    }
}

TEST_CASE("even-order multiple-root fixture keeps honest intervals") {
    RankReport rep = classify(preset("ex47:4"));
    CHECK(rep.kase == RankCase::even_ii);
    CHECK(rep.vrank == 7);
    CHECK(rep.brank_V == 3);
    CHECK(rep.brank.is_point());
    CHECK(rep.brank.lo == 3);
    CHECK(rep.sym_brank.is_point());
    CHECK(rep.sym_brank.lo == 3);
    CHECK(rep.sym_rank.lo <= 4);
    CHECK(rep.sym_rank.hi == 7);
    CHECK(rep.cp_rank.lo == 3);
    CHECK(rep.cp_rank.hi == 7);
}

TEST_CASE("generic cubic instances collapse via the wedge flattening bound") {
    SplitMix64 rng(57);
    for (std::size_t n = 3; n <= 5; ++n) {
        HankelTensor H = random_hankel(n, 3, rng.next(), 999);
        RankReport rep = classify(H);
        CHECK(rep.kase == RankCase::cubic_generic);
        std::size_t expect = (3 * n - 1) / 2;
        CHECK(rep.vrank == expect);
        CHECK(rep.brank_V == expect);
        for (const Interval* iv : {&rep.cp_rank, &rep.sym_rank, &rep.brank, &rep.sym_brank}) {
            CHECK(iv->is_point());
            CHECK(iv->lo == expect);
        }
    }
}

TEST_CASE("cubic fixtures with collapsed border rank") {
    SUBCASE("monomial-slice fixture h = e_5") {
        RankReport rep = classify(preset("ex55"));
        CHECK(rep.kase == RankCase::odd_ii);
        CHECK(rep.vrank == 6);
        CHECK(rep.brank_V == 2);
        CHECK(rep.brank.is_point());
        CHECK(rep.brank.lo == 2);
        CHECK(rep.sym_brank.is_point());
        CHECK(rep.sym_brank.lo == 2);
        CHECK(rep.sym_rank.lo == 2);
        CHECK(rep.sym_rank.hi == 6);
    }
    SUBCASE("two-monomial cube") {
        RankReport rep = classify(preset("ex36"));
        CHECK(rep.kase == RankCase::odd_ii);
        CHECK(rep.vrank == 5);
        CHECK(rep.brank_V == 3);
        CHECK(rep.brank.is_point());
        CHECK(rep.brank.lo == 3);
        CHECK(rep.sym_rank.hi == 5);
    }
}

TEST_CASE("odd orders beyond the gate report bounds only") {
    // ex37 with m = 5: r = 3, gate 1 + (n-1) m0 = 5 holds -> collapse branch.
    RankReport rep5 = classify(preset("ex37:5"));
    CHECK(rep5.kase == RankCase::odd_ii);
    CHECK(rep5.vrank == 9);
    CHECK(rep5.brank.is_point());
    CHECK(rep5.brank.lo == 3);
    // Generic quintic: r = m0(n-1) + ceil(n/2) > gate -> bounds case.
    SplitMix64 rng(91);
    HankelTensor H = random_hankel(3, 5, rng.next(), 999);
    RankReport rep = classify(H);
    CHECK(rep.kase == RankCase::odd_generic_bounds);
    auto [vr, blo] = generic_odd_profile(3, 5);
    CHECK(rep.vrank == vr);
    CHECK(rep.brank.lo == blo);
    CHECK(rep.brank.hi == rep.brank_V);
    CHECK(rep.sym_rank.hi == vr);
}

TEST_CASE("zero tensors classify to rank zero everywhere") {
    HankelTensor Z = hankel_from_h(3, 3, std::vector<Scalar>(7, Scalar::exact(0)));
    RankReport rep = classify(Z);
    CHECK(rep.vrank == 0);
    CHECK(rep.brank_V == 0);
    CHECK(rep.cp_rank.is_point());
    CHECK(rep.cp_rank.lo == 0);
}

TEST_CASE("case detection agrees with the decomposition branch") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 8; ++trial) {
        HankelTensor H = random_hankel(3, 2, rng.next(), 999);
        RankReport rep = classify(H);
        auto v = vrank(H);
        bool collapse_case = v.kase != VrankCase::multiple;
        CHECK((rep.kase == RankCase::even_i) == collapse_case);
    }
}

TEST_CASE("flattening bound never beats the wedge bound on generic cubics") {
    SplitMix64 rng(77);
    for (std::size_t n = 3; n <= 5; ++n) {
        HankelTensor H = random_hankel(n, 3, rng.next(), 999);
        std::size_t flat = mat_rank(flatten_reduced(H).mat);
        std::size_t wedge = brank_lower_bound(Order3::from_hankel(H),
                                              static_cast<unsigned>(n / 2));
        CHECK(flat <= wedge);
    }
}

TEST_CASE("reports always respect the rank chain") {
    SplitMix64 rng(213);
    for (int trial = 0; trial < 20; ++trial) {
        std::size_t n = 2 + rng.next() % 3;
        std::size_t m = 2 + rng.next() % 4;
        HankelTensor H = random_hankel(n, m, rng.next(), 99);
        RankReport rep = classify(H);  // classify throws on a violated chain
        CHECK(rep.brank.lo <= rep.cp_rank.lo);
        CHECK(rep.cp_rank.hi <= rep.sym_rank.hi);
        CHECK(rep.sym_rank.hi <= rep.vrank);
        CHECK(rep.sym_brank.lo >= rep.brank.lo);
        CHECK(rep.sym_brank.hi <= rep.sym_rank.hi);
        CHECK_FALSE(rep.certificates.empty());
    }
}
