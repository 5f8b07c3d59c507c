#include "hankel/catalecticant.hpp"

#include <algorithm>

namespace hankel {

Catalecticant catalecticant(const BinaryForm& b, std::size_t r) {
    if (r > b.d) throw DimensionError("catalecticant split out of range");
    const std::size_t rows = b.d - r + 1, cols = r + 1;
    Mat m(rows, cols, b.mode());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, b.coeffs[i + j]);
    return Catalecticant{b.d, r, std::move(m)};
}

std::vector<std::vector<std::size_t>> all_tuples(std::size_t n, std::size_t len) {
    std::vector<std::vector<std::size_t>> out;
    if (len == 0) return {{}};
    std::vector<std::size_t> cur(len, 1);
    while (true) {
        out.push_back(cur);
        std::size_t pos = len;
        while (pos-- > 0) {
            if (cur[pos] < n) {
                ++cur[pos];
                for (std::size_t k = pos + 1; k < len; ++k) cur[k] = 1;
                break;
            }
            if (pos == 0) return out;
        }
    }
}

Mat flatten_full(const HankelTensor& H) {
    const std::size_t m1 = (H.m + 1) / 2;
    const std::size_t m2 = H.m - m1;
    auto rows = all_tuples(H.n, m1);
    auto cols = all_tuples(H.n, m2);
    Mat f(rows.size(), cols.size(), H.mode());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        std::size_t rsum = 0;
        for (auto v : rows[i]) rsum += v;
        for (std::size_t j = 0; j < cols.size(); ++j) {
            std::size_t csum = rsum;
            for (auto v : cols[j]) csum += v;
            f.set(i, j, H.h[csum - H.m]);
        }
    }
    return f;
}

Catalecticant flatten_reduced(const HankelTensor& H) {
    const std::size_t m0 = H.m / 2;
    const std::size_t l = (H.n - 1) * m0;
    return catalecticant(to_binary_form(H), l);
}

Mat flatten_dedup_oracle(const HankelTensor& H) {
    const std::size_t m1 = (H.m + 1) / 2;
    const std::size_t m2 = H.m - m1;
    Mat full = flatten_full(H);
    auto rows = all_tuples(H.n, m1);
    auto cols = all_tuples(H.n, m2);
    auto pick_representatives = [&](const std::vector<std::vector<std::size_t>>& tuples,
                                    std::size_t len) {
        // One tuple per index sum; sums range over [len, n*len].
        std::vector<std::size_t> rep(H.n * len - len + 1, tuples.size());
        for (std::size_t t = 0; t < tuples.size(); ++t) {
            std::size_t sum = 0;
            for (auto v : tuples[t]) sum += v;
            if (rep[sum - len] == tuples.size()) rep[sum - len] = t;
        }
        return rep;
    };
    auto rrep = pick_representatives(rows, m1);
    auto crep = m2 == 0 ? std::vector<std::size_t>{0} : pick_representatives(cols, m2);
    // Verify the dedup is honest: equal sums must give identical rows/columns.
    for (std::size_t t = 0; t < rows.size(); ++t) {
        std::size_t sum = 0;
        for (auto v : rows[t]) sum += v;
        std::size_t rep = rrep[sum - m1];
        for (std::size_t j = 0; j < full.cols(); ++j)
            if (!(full.at(t, j) == full.at(rep, j)))
                throw InvariantError("flattening rows with equal index sum differ");
    }
    for (std::size_t t = 0; m2 > 0 && t < cols.size(); ++t) {
        std::size_t sum = 0;
        for (auto v : cols[t]) sum += v;
        std::size_t rep = crep[sum - m2];
        for (std::size_t i = 0; i < full.rows(); ++i)
            if (!(full.at(i, t) == full.at(i, rep)))
                throw InvariantError("flattening columns with equal index sum differ");
    }
    return full.submatrix(rrep, crep);
}

}  // namespace hankel
