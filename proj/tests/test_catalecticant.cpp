#include <doctest.h>

#include "hankel/catalecticant.hpp"
#include "hankel/linalg.hpp"

using namespace hankel;

namespace {

BinaryForm form(std::initializer_list<long> v) {
    std::vector<Scalar> c;
    for (long x : v) c.push_back(Scalar::exact(x));
    return BinaryForm{c.size() - 1, std::move(c)};
}

}  // namespace

TEST_CASE("catalecticant shapes and entries") {
    BinaryForm b = form({0, 0, 0, 0, 1, 0, 0});
    Catalecticant C = catalecticant(b, 5);
    REQUIRE(C.mat.rows() == 2);
    REQUIRE(C.mat.cols() == 6);
    long expect[2][6] = {{0, 0, 0, 0, 1, 0}, {0, 0, 0, 1, 0, 0}};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 6; ++j)
            CHECK(C.mat.at(i, j) == Scalar::exact(expect[i][j]));

    Catalecticant col = catalecticant(b, 0);
    CHECK(col.mat.rows() == 7);
    CHECK(col.mat.cols() == 1);
    for (std::size_t i = 0; i < 7; ++i) CHECK(col.mat.at(i, 0) == b.coeffs[i]);

    CHECK_THROWS_AS(catalecticant(b, 7), DimensionError);
}

TEST_CASE("middle catalecticant of the quartic fixture by minor expansion") {
    BinaryForm b = form({0, 0, 1, 0, 0});
    Catalecticant C = catalecticant(b, 2);
    long expect[3][3] = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(C.mat.at(i, j) == Scalar::exact(expect[i][j]));
    // 3x3 determinant by brute force: -1, so full rank.
    Scalar det = Scalar::exact(0);
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    int signs[6] = {1, -1, -1, 1, 1, -1};
    for (int p = 0; p < 6; ++p) {
        Scalar term = Scalar::exact(signs[p]);
        for (int i = 0; i < 3; ++i) term *= C.mat.at(i, perms[p][i]);
        det += term;
    }
    CHECK(det == Scalar::exact(-1));
    CHECK(mat_rank(C.mat) == 3);
}

TEST_CASE("hankel structure transposes across the split") {
    BinaryForm b = form({3, 1, 4, 1, 5, 9, 2});
    for (std::size_t r = 0; r <= 6; ++r) {
        Mat lhs = catalecticant(b, r).mat.transpose();
        Mat rhs = catalecticant(b, 6 - r).mat;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("full flattening of small tensors") {
    SUBCASE("matrix case") {
        HankelTensor H = hankel_from_h(2, 2, {Scalar::exact(1), Scalar::exact(2), Scalar::exact(3)});
        Mat F = flatten_full(H);
        REQUIRE(F.rows() == 2);
        REQUIRE(F.cols() == 2);
        CHECK(F.at(0, 0) == Scalar::exact(1));
        CHECK(F.at(0, 1) == Scalar::exact(2));
        CHECK(F.at(1, 0) == Scalar::exact(2));
        CHECK(F.at(1, 1) == Scalar::exact(3));
    }
    SUBCASE("anti-diagonal quartic fixture flattens to itself") {
        HankelTensor H = preset("ex35");
        Mat F = flatten_full(H);
        long expect[3][3] = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                CHECK(F.at(i, j) == Scalar::exact(expect[i][j]));
    }
    SUBCASE("binary cubic flattens 4x2 with the repeated middle rows") {
        HankelTensor H = hankel_from_h(
            2, 3, {Scalar::exact(2), Scalar::exact(3), Scalar::exact(5), Scalar::exact(7)});
        Mat F = flatten_full(H);
        REQUIRE(F.rows() == 4);
        REQUIRE(F.cols() == 2);
        long expect[4][2] = {{2, 3}, {3, 5}, {3, 5}, {5, 7}};
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                CHECK(F.at(i, j) == Scalar::exact(expect[i][j]));
    }
}

TEST_CASE("reduced flattening shapes") {
    // even order: square of side (n-1)m/2 + 1
    HankelTensor He = random_hankel(3, 4, 7, 9);
    Catalecticant Fe = flatten_reduced(He);
    CHECK(Fe.mat.rows() == 5);
    CHECK(Fe.mat.cols() == 5);
    // n=3, m=3: C_{4,2}, a 5x3 matrix
    HankelTensor Ho = random_hankel(3, 3, 8, 9);
    Catalecticant Fo = flatten_reduced(Ho);
    CHECK(Fo.mat.rows() == 5);
    CHECK(Fo.mat.cols() == 3);
}

TEST_CASE("reduced flattening equals the dedup submatrix with equal rank") {
    SplitMix64 rng(19);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 2 + rng.next() % 3;
        std::size_t m = 2 + rng.next() % 3;
        HankelTensor H = random_hankel(n, m, rng.next(), 9);
        Mat dedup = flatten_dedup_oracle(H);
        Mat reduced = flatten_reduced(H).mat;
        CHECK(dedup == reduced);
        CHECK(mat_rank(flatten_full(H)) == mat_rank(reduced));
    }
}

TEST_CASE("rank-one flattenings have rank one") {
    // h_j = a^j b^{d-j} for (a,b) = (2,3), n = 3, m = 2.
    std::vector<Scalar> h;
    long a = 2, b = 3;
    long aj = 1, bj = 81;  // b^{d}, d = 4
    for (int j = 0; j <= 4; ++j) {
        h.push_back(Scalar::exact(aj * bj));
        aj *= a;
        bj /= b;
    }
    HankelTensor H = hankel_from_h(3, 2, h);
    for (std::size_t r = 0; r <= 4; ++r) CHECK(mat_rank(catalecticant(to_binary_form(H), r).mat) <= 1);
    CHECK(mat_rank(flatten_full(H)) == 1);
}
