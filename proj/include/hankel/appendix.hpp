#pragma once

#include "hankel/koszul.hpp"
#include "hankel/matrix.hpp"

namespace hankel {

// 0/1 Toeplitz shift matrix: entry (i, k) = 1 iff k - i = a (0-based).
Mat toeplitz_shift(int a, std::size_t n, Mode mode = Mode::exact);

// Index families partitioning the wedge bases around mid = floor((n+1)/2):
//   R0: p-tuples without mid       C0: (p+1)-tuples with mid
//   R:  p-tuples with mid          C:  (p+1)-tuples without mid
// with the refinements R_s (mid at position s) and C_s (s entries below mid).
struct IndexFamilies {
    std::size_t n = 0;
    unsigned p = 0;
    unsigned mid = 0;
    std::vector<WedgeIndex> R0, C0, R, C;

    static IndexFamilies build(std::size_t n);
    std::vector<WedgeIndex> R_s(unsigned s) const;
    std::vector<WedgeIndex> C_s(unsigned s) const;
};

// Blocks of the flattening matrix of the special slice tensor, partitioned
// as [D T1; T2 0] after reordering rows (R0 then R), columns (C0 then C)
// and reversing k within every column block (which turns the anti-diagonal
// blocks into Toeplitz shifts). D comes out diagonal with +-1 entries.
struct AppendixBlocks {
    IndexFamilies fam;
    Mat D, T1, T2;
};

AppendixBlocks build_blocks(std::size_t n);

// The Schur-complement product -T2 D T1 (D is its own inverse).
Mat schur_M(std::size_t n);

// Blockwise formula: the (J, J') block of M is
//   delta * (T_{j'-mid} T_{j-mid} - T_{j-mid} T_{j'-mid})
// when J' = J \ {mid} u {j, j'} with j < mid < j', zero otherwise.
Mat block_of_M(std::size_t n, const WedgeIndex& J, const WedgeIndex& Jp);

struct LemmaA1Result {
    std::size_t n = 0;
    std::size_t rank_exact = 0;
    std::size_t rank_gf2 = 0;
    std::size_t expected = 0;  // binom(n-1, p+1) * (p+1)
    std::size_t koszul_rank = 0;
    bool rank_split_holds = false;  // rank(M_H^p) = n*binom(n-1,p) + rank(M)
    bool pass = false;
};

LemmaA1Result verify_lemmaA1(std::size_t n);

struct MsBlock {
    unsigned s = 0;
    Mat trimmed;  // rows/columns with p-s+2 <= index <= n-s removed
    std::size_t expect_rows = 0, expect_cols = 0;
    std::size_t gf2_rank = 0;
    bool shape_ok = false;
    bool full_column_rank_gf2 = false;
};

// The block-diagonal split M = Diag{M_1, ..., M_p} by the position of mid,
// with the row/column trimming applied; blocks with no columns are skipped.
std::vector<MsBlock> block_diagonal_split(std::size_t n);

}  // namespace hankel
