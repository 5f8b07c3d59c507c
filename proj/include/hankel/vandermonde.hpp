#pragma once

#include <cstdint>

#include "hankel/roots.hpp"
#include "hankel/tensor.hpp"

namespace hankel {

// Border Vandermonde rank: rank of C_{d-s,s}(h) at the middle split
// s = floor(d/2) (equals the symmetric border rank of the binary form).
std::size_t border_vrank(const HankelTensor& H);

enum class VrankCase { full, squarefree, multiple };

const char* vrank_case_name(VrankCase c);

struct VrankResult {
    std::size_t r = 0;      // border V-rank
    std::size_t vrank = 0;  // r or d - r + 2
    VrankCase kase = VrankCase::full;
};

// The rank dichotomy: vrank = r when r = d/2 + 1 (d even) or the unique
// kernel form of C_{d-r,r}(h) is squarefree; d - r + 2 otherwise.
VrankResult vrank(const HankelTensor& H);

// The kernel form of C_{d-r,r}(h); its kernel must be one-dimensional
// (anything else is an InvariantError, catching rank bugs upstream).
KernelForm unique_kernel_form(const BinaryForm& b, std::size_t r);

// A squarefree element of ker C_{d-k,k}(h): deterministic simple
// combinations of the kernel basis first, then up to 64 seeded draws with
// widening integer coefficients; NoSquarefreeKernelError afterwards.
KernelForm generic_kernel_form(const BinaryForm& b, std::size_t k, std::uint64_t seed = 0);

// Solve h_j = sum_i lambda_i a_i^j b_i^{d-j} for simple, pairwise distinct
// roots; the system is consistent exactly when the roots fit the form.
std::vector<Scalar> solve_lambdas(const std::vector<ProjectiveRoot>& roots, const BinaryForm& b,
                                  double tol = 1e-9);

// Algorithm: border rank, kernel form, squarefree branch, roots, lambdas.
// The result is verified against H (exactly when arithmetic allows, at
// 1e-9 otherwise) before it is returned.
VandermondeDecomposition decompose(const HankelTensor& H, std::uint64_t seed = 0);

}  // namespace hankel
