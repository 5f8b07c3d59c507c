#pragma once

#include "hankel/matrix.hpp"
#include "hankel/tensor.hpp"

namespace hankel {

// Catalecticant (Hankel) matrix of a binary form: shape (d-r+1) x (r+1)
// with entry (i, j) = h_{i+j}.
struct Catalecticant {
    std::size_t d = 0;
    std::size_t r = 0;
    Mat mat;
};

Catalecticant catalecticant(const BinaryForm& b, std::size_t r);

// Full symmetric flattening: n^{m1} x n^{m-m1} with m1 = ceil(m/2); rows and
// columns indexed by index tuples in lexicographic order.
Mat flatten_full(const HankelTensor& H);

// The deduplicated flattening, computed directly from h as the catalecticant
// C_{d-l,l}(h) with l = (n-1) * floor(m/2). flatten_full is kept as the test
// oracle for both the entrywise identification and the rank equality.
Catalecticant flatten_reduced(const HankelTensor& H);

// Test oracle: the submatrix of flatten_full on one representative tuple per
// row/column index-sum. Throws InvariantError if two tuples with equal sum
// ever disagree.
Mat flatten_dedup_oracle(const HankelTensor& H);

// All index tuples of the given length over [1, n], lexicographic.
std::vector<std::vector<std::size_t>> all_tuples(std::size_t n, std::size_t len);

}  // namespace hankel
