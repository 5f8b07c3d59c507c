#include "hankel/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hankel {

namespace detail {

std::vector<GaussInt> to_gauss_int_rows(const Mat& M) {
    std::vector<GaussInt> a(M.rows() * M.cols());
    for (std::size_t i = 0; i < M.rows(); ++i) {
        Int den(1);
        for (std::size_t j = 0; j < M.cols(); ++j) {
            const GaussRat& g = M.at(i, j).exact_value();
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), g.re.get_den().get_mpz_t());
            mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), g.im.get_den().get_mpz_t());
        }
        for (std::size_t j = 0; j < M.cols(); ++j) {
            const GaussRat& g = M.at(i, j).exact_value();
            Rat re = g.re * den;
            Rat im = g.im * den;
            a[i * M.cols() + j] = GaussInt{re.get_num(), im.get_num()};
        }
    }
    return a;
}

std::size_t bareiss_rank(std::vector<GaussInt> a, std::size_t rows, std::size_t cols,
                         bool parallel) {
    if (rows == 0 || cols == 0) return 0;
    GaussInt prev{Int(1)};
    std::size_t rank = 0;
    const std::size_t steps = std::min(rows, cols);
    while (rank < steps) {
        // Complete pivoting on the smallest nonzero entry keeps the minors small.
        std::size_t pi = rows, pj = cols;
        std::size_t best = std::numeric_limits<std::size_t>::max();
        for (std::size_t i = rank; i < rows; ++i)
            for (std::size_t j = rank; j < cols; ++j) {
                const GaussInt& v = a[i * cols + j];
                if (v.is_zero()) continue;
                std::size_t sz = v.bits();
                if (sz < best) {
                    best = sz;
                    pi = i;
                    pj = j;
                }
            }
        if (pi == rows) break;  // remaining block is zero
        if (pi != rank)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a[rank * cols + j], a[pi * cols + j]);
        if (pj != rank)
            for (std::size_t i = 0; i < rows; ++i)
                std::swap(a[i * cols + rank], a[i * cols + pj]);
        const GaussInt piv = a[rank * cols + rank];
        const std::size_t k = rank;
        auto update_row = [&](std::size_t i) {
            GaussInt head = a[i * cols + k];
            for (std::size_t j = k + 1; j < cols; ++j) {
                a[i * cols + j] =
                    divexact(a[i * cols + j] * piv - head * a[k * cols + j], prev);
            }
            a[i * cols + k] = GaussInt{};
        };
        if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
            for (long long i = static_cast<long long>(k) + 1; i < static_cast<long long>(rows);
                 ++i)
                update_row(static_cast<std::size_t>(i));
        } else {
            for (std::size_t i = k + 1; i < rows; ++i) update_row(i);
        }
        prev = piv;
        ++rank;
    }
    return rank;
}

std::vector<std::uint64_t> pack_gf2(const Mat& M, std::size_t& words_per_row) {
    words_per_row = (M.cols() + 63) / 64;
    std::vector<std::uint64_t> w(M.rows() * words_per_row, 0);
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            if (M.at(i, j).gf2_value()) w[i * words_per_row + j / 64] |= 1ULL << (j % 64);
    return w;
}

std::size_t gf2_rank_words(std::vector<std::uint64_t> w, std::size_t rows,
                           std::size_t words_per_row, bool parallel) {
    if (rows == 0 || words_per_row == 0) return 0;
    std::size_t rank = 0;
    const std::size_t cols = words_per_row * 64;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        const std::size_t wi = col / 64;
        const std::uint64_t bit = 1ULL << (col % 64);
        std::size_t pivot = rows;
        for (std::size_t i = rank; i < rows; ++i)
            if (w[i * words_per_row + wi] & bit) {
                pivot = i;
                break;
            }
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t k = 0; k < words_per_row; ++k)
                std::swap(w[rank * words_per_row + k], w[pivot * words_per_row + k]);
        const std::uint64_t* prow = &w[rank * words_per_row];
        auto clear_row = [&](std::size_t i) {
            if (w[i * words_per_row + wi] & bit)
                for (std::size_t k = wi; k < words_per_row; ++k) w[i * words_per_row + k] ^= prow[k];
        };
        if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
            for (long long i = static_cast<long long>(rank) + 1;
                 i < static_cast<long long>(rows); ++i)
                clear_row(static_cast<std::size_t>(i));
        } else {
            for (std::size_t i = rank + 1; i < rows; ++i) clear_row(i);
        }
        ++rank;
    }
    return rank;
}

std::size_t float_rank(std::vector<std::complex<double>> a, std::size_t rows, std::size_t cols,
                       double tol, bool parallel) {
    if (rows == 0 || cols == 0) return 0;
    std::vector<double> pivots;
    const std::size_t steps = std::min(rows, cols);
    for (std::size_t k = 0; k < steps; ++k) {
        std::size_t pi = k, pj = k;
        double best = -1.0;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j) {
                double m = std::abs(a[i * cols + j]);
                if (m > best) {
                    best = m;
                    pi = i;
                    pj = j;
                }
            }
        if (best <= 0.0) break;
        if (pi != k)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[k * cols + j], a[pi * cols + j]);
        if (pj != k)
            for (std::size_t i = 0; i < rows; ++i) std::swap(a[i * cols + k], a[i * cols + pj]);
        pivots.push_back(best);
        const std::complex<double> piv = a[k * cols + k];
        auto update_row = [&](std::size_t i) {
            std::complex<double> f = a[i * cols + k] / piv;
            a[i * cols + k] = 0.0;
            for (std::size_t j = k + 1; j < cols; ++j) a[i * cols + j] -= f * a[k * cols + j];
        };
        if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
            for (long long i = static_cast<long long>(k) + 1; i < static_cast<long long>(rows);
                 ++i)
                update_row(static_cast<std::size_t>(i));
        } else {
            for (std::size_t i = k + 1; i < rows; ++i) update_row(i);
        }
    }
    if (pivots.empty()) return 0;
    double scale = *std::max_element(pivots.begin(), pivots.end());
    std::size_t r = 0;
    for (double p : pivots)
        if (p > tol * scale) ++r;
    return r;
}

// Reduced row echelon form over an exact or float field. Returns pivot
// columns; `m` is replaced by its RREF.
struct Rref {
    std::vector<std::size_t> pivot_cols;
};

template <typename T, typename Policy>
Rref rref_in_place(std::vector<T>& m, std::size_t rows, std::size_t cols, const Policy& pol) {
    Rref out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        pivot = pol.choose_pivot(m, rows, cols, r, c);
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(m[r * cols + j], m[pivot * cols + j]);
        T inv = pol.invert(m[r * cols + c]);
        for (std::size_t j = c; j < cols; ++j) m[r * cols + j] = m[r * cols + j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            T f = m[i * cols + c];
            if (pol.is_zero(f)) continue;
            for (std::size_t j = c; j < cols; ++j)
                m[i * cols + j] = m[i * cols + j] - f * m[r * cols + j];
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    return out;
}

struct ExactPolicy {
    bool is_zero(const GaussRat& v) const { return v.is_zero(); }
    GaussRat invert(const GaussRat& v) const { return GaussRat(Rat(1)) / v; }
    std::size_t choose_pivot(const std::vector<GaussRat>& m, std::size_t rows, std::size_t cols,
                             std::size_t r, std::size_t c) const {
        for (std::size_t i = r; i < rows; ++i)
            if (!m[i * cols + c].is_zero()) return i;
        return rows;
    }
};

struct FloatPolicy {
    double threshold;
    bool is_zero(const std::complex<double>& v) const { return std::abs(v) <= threshold; }
    std::complex<double> invert(const std::complex<double>& v) const { return 1.0 / v; }
    std::size_t choose_pivot(const std::vector<std::complex<double>>& m, std::size_t rows,
                             std::size_t cols, std::size_t r, std::size_t c) const {
        std::size_t best = rows;
        double mag = threshold;
        for (std::size_t i = r; i < rows; ++i) {
            double v = std::abs(m[i * cols + c]);
            if (v > mag) {
                mag = v;
                best = i;
            }
        }
        return best;
    }
};

template <typename T>
std::vector<std::vector<T>> kernel_from_rref(const std::vector<T>& m, std::size_t cols,
                                             const std::vector<std::size_t>& pivot_cols, T one,
                                             T zero) {
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<T> v(cols, zero);
        v[c] = one;
        for (std::size_t r = 0; r < pivot_cols.size(); ++r)
            v[pivot_cols[r]] = zero - m[r * cols + c];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace detail

std::size_t mat_rank(const Mat& M, double tol) {
    if (M.empty()) return 0;
    switch (M.mode()) {
        case Mode::exact:
            return detail::bareiss_rank(detail::to_gauss_int_rows(M), M.rows(), M.cols(), true);
        case Mode::gf2:
            return rank_gf2(M);
        case Mode::fp: {
            if (tol < 0) throw DomainError("negative float rank tolerance");
            std::vector<std::complex<double>> a(M.rows() * M.cols());
            for (std::size_t i = 0; i < M.rows(); ++i)
                for (std::size_t j = 0; j < M.cols(); ++j) a[i * M.cols() + j] = M.at(i, j).fp_value();
            return detail::float_rank(std::move(a), M.rows(), M.cols(), tol, true);
        }
    }
    return 0;
}

std::size_t rank_gf2(const Mat& M) {
    if (M.mode() != Mode::gf2) throw ModeError("rank_gf2 needs a gf2 matrix");
    if (M.empty()) return 0;
    std::size_t wpr = 0;
    auto words = detail::pack_gf2(M, wpr);
    return detail::gf2_rank_words(std::move(words), M.rows(), wpr, true);
}

std::vector<std::vector<Scalar>> kernel_basis(const Mat& M, double tol) {
    if (M.mode() == Mode::gf2) throw ModeError("kernel_basis: exact or float mode only");
    const std::size_t rows = M.rows(), cols = M.cols();
    if (cols == 0) return {};
    if (M.mode() == Mode::exact) {
        std::vector<GaussRat> m(rows * cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) m[i * cols + j] = M.at(i, j).exact_value();
        auto rr = detail::rref_in_place(m, rows, cols, detail::ExactPolicy{});
        auto basis = detail::kernel_from_rref(m, cols, rr.pivot_cols, GaussRat(Rat(1)),
                                              GaussRat(Rat(0)));
        std::vector<std::vector<Scalar>> out;
        for (auto& v : basis) {
            GaussRat lead;
            for (const auto& x : v)
                if (!x.is_zero()) {
                    lead = x;
                    break;
                }
            std::vector<Scalar> w;
            w.reserve(cols);
            for (auto& x : v) w.push_back(Scalar::exact(x / lead));
            out.push_back(std::move(w));
        }
        return out;
    }
    // Float path.
    std::vector<std::complex<double>> m(rows * cols);
    double maxabs = 0.0;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            m[i * cols + j] = M.at(i, j).fp_value();
            maxabs = std::max(maxabs, std::abs(m[i * cols + j]));
        }
    detail::FloatPolicy pol{tol * std::max(1.0, maxabs)};
    auto rr = detail::rref_in_place(m, rows, cols, pol);
    auto basis = detail::kernel_from_rref(m, cols, rr.pivot_cols,
                                          std::complex<double>(1.0), std::complex<double>(0.0));
    std::vector<std::vector<Scalar>> out;
    for (auto& v : basis) {
        std::complex<double> lead = 0.0;
        for (const auto& x : v)
            if (std::abs(x) > pol.threshold) {
                lead = x;
                break;
            }
        if (lead == std::complex<double>(0.0)) lead = 1.0;
        std::vector<Scalar> w;
        w.reserve(cols);
        for (auto& x : v) w.push_back(Scalar::fp(x / lead));
        out.push_back(std::move(w));
    }
    return out;
}

std::vector<Scalar> solve_exact(const Mat& A, const std::vector<Scalar>& b, double tol) {
    if (b.size() != A.rows()) throw DimensionError("solve: rhs length mismatch");
    const std::size_t rows = A.rows(), cols = A.cols();
    if (A.mode() == Mode::exact) {
        const std::size_t w = cols + 1;
        std::vector<GaussRat> m(rows * w);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) m[i * w + j] = A.at(i, j).exact_value();
            m[i * w + cols] = b[i].exact_value();
        }
        auto rr = detail::rref_in_place(m, rows, w, detail::ExactPolicy{});
        for (auto c : rr.pivot_cols)
            if (c == cols) {
                throw NoSolutionError("exact system is inconsistent", 1.0);
            }
        std::vector<Scalar> x(cols, Scalar::exact(0));
        for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r)
            x[rr.pivot_cols[r]] = Scalar::exact(m[r * w + cols]);
        return x;
    }
    if (A.mode() == Mode::fp) {
        const std::size_t w = cols + 1;
        std::vector<std::complex<double>> m(rows * w);
        double maxabs = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                m[i * w + j] = A.at(i, j).fp_value();
                maxabs = std::max(maxabs, std::abs(m[i * w + j]));
            }
            m[i * w + cols] = b[i].fp_value();
        }
        detail::FloatPolicy pol{tol * std::max(1.0, maxabs)};
        auto rr = detail::rref_in_place(m, rows, w, pol);
        std::vector<Scalar> x(cols, Scalar::fp(0.0));
        bool inconsistent = false;
        for (auto c : rr.pivot_cols)
            if (c == cols) inconsistent = true;
        if (!inconsistent)
            for (std::size_t r = 0; r < rr.pivot_cols.size(); ++r)
                x[rr.pivot_cols[r]] = Scalar::fp(m[r * w + cols]);
        // Residual check covers both branches.
        double res = 0.0;
        auto Ax = mat_vec(A, x);
        for (std::size_t i = 0; i < rows; ++i) res = std::max(res, std::abs(Ax[i].fp_value() - b[i].fp_value()));
        if (inconsistent || res > tol * std::max(1.0, maxabs))
            throw NoSolutionError("float system residual too large", res);
        return x;
    }
    throw ModeError("solve: exact or float mode only");
}

}  // namespace hankel
