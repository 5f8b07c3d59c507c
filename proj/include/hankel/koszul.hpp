#pragma once

#include <optional>
#include <utility>

#include "hankel/matrix.hpp"
#include "hankel/tensor.hpp"

namespace hankel {

// Strictly increasing tuple of 1-based indices; wedge basis label.
using WedgeIndex = std::vector<unsigned>;

// All p-element WedgeIndex tuples over [1, n], lexicographic.
std::vector<WedgeIndex> enumerate_wedges(unsigned n, unsigned p);

// Sorted insertion of j into J with the sign (-1)^{p-q}, q the 1-based
// position of j in the result; nullopt when j is already in J.
std::optional<std::pair<WedgeIndex, int>> wedge_insert(const WedgeIndex& J, unsigned j);

// Order-3 cubical tensor view used by the flattening construction.
struct Order3 {
    std::size_t n = 0;
    std::vector<Scalar> t;  // t[(i-1)n^2 + (j-1)n + (k-1)], 1-based access below
    Mode mode() const { return t.empty() ? Mode::exact : t.front().mode(); }
    const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
        return t[(i - 1) * n * n + (j - 1) * n + (k - 1)];
    }
    static Order3 from_hankel(const HankelTensor& H);
    static Order3 from_dense(const DenseSymmetricTensor& D);
};

// Representing matrix of the p-th Koszul flattening: shape
// n*binom(n,p) x n*binom(n,p+1), rows labeled (J, i) lexicographic J outer,
// columns (J', k) likewise; entry = epsilon_{J,J',j} * t_{ijk}.
struct KoszulMatrix {
    std::size_t n = 0;
    unsigned p = 0;
    Mat mat;
    std::vector<std::pair<WedgeIndex, unsigned>> row_labels;
    std::vector<std::pair<WedgeIndex, unsigned>> col_labels;

    std::string row_tag(std::size_t r) const;  // "(j1,j2|i)"
    std::string col_tag(std::size_t c) const;
};

KoszulMatrix koszul_matrix(const Order3& T, unsigned p);

std::size_t koszul_rank(const Order3& T, unsigned p);

// ceil(rank / binom(n-1, p)): a border-rank lower bound certificate.
std::size_t brank_lower_bound(const Order3& T, unsigned p);

struct Thm52Result {
    unsigned p = 0;
    std::size_t r = 0;
    std::size_t rank = 0;
    std::size_t expected = 0;
    bool pass = false;
};

// The special cubic Hankel tensor with ones on the slice i+j+k-2 = r,
// r = floor((3n-1)/2), p = floor(n/2): its flattening rank must be
// binom(n-1,p) * r.
Thm52Result verify_theorem52(std::size_t n);

}  // namespace hankel
