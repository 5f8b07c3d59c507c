#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "hankel/matrix.hpp"

namespace hankel {

// Rank of a matrix in its own mode.
//   exact/gf2: mathematically exact (fraction-free / bitset elimination), tol ignored.
//   float: complete-pivoted elimination; rank = #pivots with |pivot| > tol * max|pivot|.
// Empty matrices have rank 0.
std::size_t mat_rank(const Mat& M, double tol = 1e-8);

// Basis of the right null space, each vector scaled so its first nonzero
// entry is 1. Exact entries in exact mode. Full-rank matrices give {}.
std::vector<std::vector<Scalar>> kernel_basis(const Mat& M, double tol = 1e-8);

// One solution of A x = b (free variables set to zero). Exact in exact mode;
// float solutions satisfy |A x - b| <= tol componentwise scale. Inconsistent
// systems throw NoSolutionError carrying the residual.
std::vector<Scalar> solve_exact(const Mat& A, const std::vector<Scalar>& b, double tol = 1e-8);

// Rank over GF(2); requires gf2 mode.
std::size_t rank_gf2(const Mat& M);

namespace detail {

// Fraction-free (Bareiss) elimination over Z[i]; `parallel` toggles the
// OpenMP row-update kernel, the serial path is the reference implementation.
std::size_t bareiss_rank(std::vector<GaussInt> a, std::size_t rows, std::size_t cols,
                         bool parallel);

// Word-packed GF(2) elimination.
std::size_t gf2_rank_words(std::vector<std::uint64_t> words, std::size_t rows,
                           std::size_t words_per_row, bool parallel);

std::size_t float_rank(std::vector<std::complex<double>> a, std::size_t rows, std::size_t cols,
                       double tol, bool parallel);

// Row-scaled integer image of an exact matrix (denominators cleared per row);
// has the same rank as the input.
std::vector<GaussInt> to_gauss_int_rows(const Mat& M);

std::vector<std::uint64_t> pack_gf2(const Mat& M, std::size_t& words_per_row);

}  // namespace detail

}  // namespace hankel
