#pragma once

#include <string>
#include <vector>

#include "hankel/tensor.hpp"
#include "hankel/vandermonde.hpp"

namespace hankel {

struct Interval {
    std::size_t lo = 0;
    std::size_t hi = 0;
    bool is_point() const { return lo == hi; }
};

enum class RankCase {
    even_i,
    even_ii,
    odd_i,
    odd_ii,
    odd_generic_bounds,
    cubic_generic,
    cubic_unresolved,
};

const char* rank_case_name(RankCase c);

struct Certificate {
    std::string quantity;
    std::string theorem;  // mathematical name of the fact used
    std::string witness;
};

// Classified rank profile. Quantities that the case theorems pin are point
// intervals; anything unresolved stays an honest interval bounded by the
// flattening / Koszul lower bounds below and the V-rank above.
struct RankReport {
    std::size_t vrank = 0;
    std::size_t brank_V = 0;
    Interval cp_rank, sym_rank, brank, sym_brank;
    RankCase kase = RankCase::even_i;
    std::vector<Certificate> certificates;
};

RankReport classify(const HankelTensor& H);

// ceil(((n-1)m + 1) / 2): the generic V-rank.
std::size_t generic_vrank(std::size_t n, std::size_t m);

// Generic odd-order profile: vrank = m0(n-1) + ceil(n/2),
// brank lower bound m0(n-1) + 1, with m = 2 m0 + 1.
std::pair<std::size_t, std::size_t> generic_odd_profile(std::size_t n, std::size_t m);

}  // namespace hankel
