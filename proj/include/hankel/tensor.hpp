#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hankel/cyclotomic.hpp"
#include "hankel/scalar.hpp"

namespace hankel {

// Hankel tensor of order m and dimension n, stored through its generating
// vector h of length (n-1)m + 1: the entry at (i_1..i_m), 1-based, is
// h[i_1 + ... + i_m - m]. The dense tensor is only ever expanded on demand.
struct HankelTensor {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Scalar> h;

    std::size_t degree() const { return (n - 1) * m; }  // d
    Mode mode() const { return h.empty() ? Mode::exact : h.front().mode(); }
    Scalar at(const std::vector<std::size_t>& idx) const;  // 1-based indices
    bool is_zero() const;
};

HankelTensor hankel_from_h(std::size_t n, std::size_t m, std::vector<Scalar> h);

// Binary form of degree d under the dual convention
//   h(x,y) = sum_j binom(d,j) h_j x^j y^{d-j};
// coeffs holds (h_0..h_d). The pi map to/from Hankel tensors copies the
// coefficient vector verbatim.
struct BinaryForm {
    std::size_t d = 0;
    std::vector<Scalar> coeffs;
    Mode mode() const { return coeffs.empty() ? Mode::exact : coeffs.front().mode(); }
};

BinaryForm to_binary_form(const HankelTensor& H);
HankelTensor from_binary_form(const BinaryForm& b, std::size_t n, std::size_t m);

struct VandermondeTerm {
    Scalar lambda, a, b;
};

// Exact node data for terms whose coordinates live in a cyclotomic field.
struct CycTerm {
    Cyc lambda, a, b;
};

struct VandermondeDecomposition {
    std::size_t n = 0, m = 0;
    std::vector<VandermondeTerm> terms;
    std::size_t claimed_rank = 0;
    bool unique = false;
    // True when the decomposition was produced and verified in exact
    // arithmetic (Gaussian rational or cyclotomic); float otherwise.
    bool exact = false;
    std::optional<std::vector<CycTerm>> cyc_terms;
};

// Moment vector v with v_i = a^{i-1} b^{n-i} (1-based), so that
// sum_i lambda_i v_i^{(x) m} has generating vector h_j = sum lambda a^j b^{d-j}.
std::vector<Scalar> vandermonde_vector(const Scalar& a, const Scalar& b, std::size_t n);

HankelTensor reconstruct(const VandermondeDecomposition& dec);

// Symmetric dense tensor; one stored entry per sorted multi-index.
struct DenseSymmetricTensor {
    std::size_t n = 0, m = 0;
    std::vector<Scalar> packed;  // indexed by rank of the sorted tuple

    Scalar at(std::vector<std::size_t> idx) const;  // 1-based, any order
    static std::size_t packed_size(std::size_t n, std::size_t m);
};

DenseSymmetricTensor dense(const HankelTensor& H);
bool tensors_equal(const DenseSymmetricTensor& A, const DenseSymmetricTensor& B, double tol = 0.0);

// Named generators for the fixture tensors plus seeded random integer ones.
//   ex35            3x3 anti-diagonal Hankel matrix (n=3, m=2)
//   ex36            n=3, m=3, entries 1 where i+j+k = 7
//   ex37:<m>        n=3, order m, h_l = 1 at l = 1 and l = 2m
//   ex47:<m>        n=3, order m, h_l = 1 at l = 2
//   thm52:<n>       order 3, entries 1 where i+j+k-2 = floor((3n-1)/2)
//   ex55            n=3, m=3, h = (0,0,0,0,0,1,0)
//   random:<n>:<m>  entries uniform in [-bound, bound]
HankelTensor preset(const std::string& name, std::uint64_t seed = 0, long bound = 999);

HankelTensor random_hankel(std::size_t n, std::size_t m, std::uint64_t seed, long bound);

// Enumerates sorted index tuples (1-based, non-decreasing) of given length.
std::vector<std::vector<std::size_t>> sorted_tuples(std::size_t n, std::size_t len);

}  // namespace hankel
