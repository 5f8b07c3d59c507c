#include "hankel/koszul.hpp"

#include <algorithm>

#include "hankel/linalg.hpp"

namespace hankel {

std::vector<WedgeIndex> enumerate_wedges(unsigned n, unsigned p) {
    std::vector<WedgeIndex> out;
    if (p == 0) return {{}};
    if (p > n) return out;
    WedgeIndex cur(p);
    for (unsigned i = 0; i < p; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        // next combination
        int pos = static_cast<int>(p) - 1;
        while (pos >= 0 && cur[pos] == n - (p - 1 - pos)) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (unsigned k = pos + 1; k < p; ++k) cur[k] = cur[k - 1] + 1;
    }
    return out;
}

std::optional<std::pair<WedgeIndex, int>> wedge_insert(const WedgeIndex& J, unsigned j) {
    if (j == 0) throw DimensionError("wedge index is 1-based");
    unsigned q0 = 0;  // elements of J below j
    for (unsigned v : J) {
        if (v == j) return std::nullopt;
        if (v < j) ++q0;
    }
    WedgeIndex out = J;
    out.insert(out.begin() + q0, j);
    // epsilon = (-1)^{p-q}, q the 1-based position of j in the result.
    int sign = ((J.size() - q0) % 2 == 0) ? -1 : 1;
    return std::make_pair(std::move(out), sign);
}

Order3 Order3::from_hankel(const HankelTensor& H) {
    if (H.m != 3) throw DimensionError("order-3 view needs a cubic tensor");
    Order3 T;
    T.n = H.n;
    T.t.reserve(H.n * H.n * H.n);
    for (std::size_t i = 1; i <= H.n; ++i)
        for (std::size_t j = 1; j <= H.n; ++j)
            for (std::size_t k = 1; k <= H.n; ++k) T.t.push_back(H.h[i + j + k - 3]);
    return T;
}

Order3 Order3::from_dense(const DenseSymmetricTensor& D) {
    if (D.m != 3) throw DimensionError("order-3 view needs a cubic tensor");
    Order3 T;
    T.n = D.n;
    T.t.reserve(D.n * D.n * D.n);
    for (std::size_t i = 1; i <= D.n; ++i)
        for (std::size_t j = 1; j <= D.n; ++j)
            for (std::size_t k = 1; k <= D.n; ++k) T.t.push_back(D.at({i, j, k}));
    return T;
}

std::string KoszulMatrix::row_tag(std::size_t r) const {
    const auto& [J, i] = row_labels[r];
    std::string s = "(";
    for (std::size_t t = 0; t < J.size(); ++t) s += (t ? "," : "") + std::to_string(J[t]);
    s += "|" + std::to_string(i) + ")";
    return s;
}

std::string KoszulMatrix::col_tag(std::size_t c) const {
    const auto& [J, k] = col_labels[c];
    std::string s = "(";
    for (std::size_t t = 0; t < J.size(); ++t) s += (t ? "," : "") + std::to_string(J[t]);
    s += "|" + std::to_string(k) + ")";
    return s;
}

KoszulMatrix koszul_matrix(const Order3& T, unsigned p) {
    const unsigned n = static_cast<unsigned>(T.n);
    if (p < 1 || p > n - 1) throw DimensionError("koszul flattening needs 1 <= p <= n-1");
    auto rows_J = enumerate_wedges(n, p);
    auto cols_J = enumerate_wedges(n, p + 1);
    KoszulMatrix K;
    K.n = T.n;
    K.p = p;
    const std::size_t R = rows_J.size() * n, C = cols_J.size() * n;
    K.mat = Mat(R, C, T.mode());
    // Column lookup by wedge tuple (lexicographic order is the enumeration
    // order, so a map from tuple to block index suffices).
    std::vector<std::pair<WedgeIndex, std::size_t>> lookup;
    lookup.reserve(cols_J.size());
    for (std::size_t c = 0; c < cols_J.size(); ++c) lookup.emplace_back(cols_J[c], c);
    std::sort(lookup.begin(), lookup.end());
    auto col_block = [&](const WedgeIndex& J) -> std::size_t {
        auto it = std::lower_bound(lookup.begin(), lookup.end(), J,
                                   [](const auto& a, const WedgeIndex& b) { return a.first < b; });
        return it->second;
    };
    for (std::size_t rb = 0; rb < rows_J.size(); ++rb) {
        const WedgeIndex& J = rows_J[rb];
        for (unsigned i = 1; i <= n; ++i) K.row_labels.emplace_back(J, i);
        for (unsigned j = 1; j <= n; ++j) {
            auto ins = wedge_insert(J, j);
            if (!ins) continue;
            const auto& [J2, sign] = *ins;
            const std::size_t cb = col_block(J2);
            for (unsigned i = 1; i <= n; ++i)
                for (unsigned k = 1; k <= n; ++k) {
                    const Scalar& t = T.at(i, j, k);
                    if (t.is_zero()) continue;
                    Scalar v = sign == 1 ? t : -t;
                    std::size_t row = rb * n + (i - 1);
                    std::size_t col = cb * n + (k - 1);
                    K.mat.set(row, col, K.mat.at(row, col) + v);
                }
        }
    }
    for (std::size_t cb = 0; cb < cols_J.size(); ++cb)
        for (unsigned k = 1; k <= n; ++k) K.col_labels.emplace_back(cols_J[cb], k);
    return K;
}

std::size_t koszul_rank(const Order3& T, unsigned p) { return mat_rank(koszul_matrix(T, p).mat); }

std::size_t brank_lower_bound(const Order3& T, unsigned p) {
    std::size_t r = koszul_rank(T, p);
    std::uint64_t denom = binomial(static_cast<unsigned>(T.n) - 1, p);
    return static_cast<std::size_t>((r + denom - 1) / denom);
}

Thm52Result verify_theorem52(std::size_t n) {
    if (n < 2) throw DimensionError("needs n >= 2");
    Thm52Result res;
    res.p = static_cast<unsigned>(n / 2);
    res.r = (3 * n - 1) / 2;
    HankelTensor H = preset("thm52:" + std::to_string(n));
    res.rank = koszul_rank(Order3::from_hankel(H), res.p);
    res.expected = static_cast<std::size_t>(binomial(static_cast<unsigned>(n - 1), res.p)) * res.r;
    res.pass = res.rank == res.expected;
    return res;
}

}  // namespace hankel
