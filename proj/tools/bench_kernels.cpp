// Compares the serial reference elimination kernels against the OpenMP
// ones on random integer Hankel-style inputs and checks they agree.
#include <chrono>
#include <cstdio>
#include <vector>

#include "hankel/appendix.hpp"
#include "hankel/koszul.hpp"
#include "hankel/linalg.hpp"
#include "hankel/tensor.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace hankel;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Sample {
    const char* name;
    std::size_t rows, cols;
    double serial_s, parallel_s;
    std::size_t rank;
};

Sample bench_exact(const char* name, const Mat& M) {
    auto a = detail::to_gauss_int_rows(M);
    auto t0 = Clock::now();
    std::size_t r_serial = detail::bareiss_rank(a, M.rows(), M.cols(), false);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    std::size_t r_par = detail::bareiss_rank(a, M.rows(), M.cols(), true);
    double tp = seconds_since(t0);
    if (r_serial != r_par) std::fprintf(stderr, "rank mismatch on %s!\n", name);
    return {name, M.rows(), M.cols(), ts, tp, r_serial};
}

Sample bench_gf2(const char* name, const Mat& M) {
    std::size_t wpr = 0;
    auto w = detail::pack_gf2(M, wpr);
    auto t0 = Clock::now();
    std::size_t r_serial = detail::gf2_rank_words(w, M.rows(), wpr, false);
    double ts = seconds_since(t0);
    t0 = Clock::now();
    std::size_t r_par = detail::gf2_rank_words(w, M.rows(), wpr, true);
    double tp = seconds_since(t0);
    if (r_serial != r_par) std::fprintf(stderr, "rank mismatch on %s!\n", name);
    return {name, M.rows(), M.cols(), ts, tp, r_serial};
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available; parallel path runs serially\n");
#endif
    std::vector<Sample> samples;

    // Koszul flattening of the special cubic tensor, n = 6 (120 x 90).
    {
        HankelTensor H = preset("thm52:6");
        Mat K = koszul_matrix(Order3::from_hankel(H), 3).mat;
        samples.push_back(bench_exact("koszul-thm52-n6", K));
    }
    // Schur block for n = 8 (280 x 168), exact and GF(2).
    {
        Mat M = schur_M(8);
        samples.push_back(bench_exact("schur-n8-exact", M));
        Mat g(M.rows(), M.cols(), Mode::gf2);
        for (std::size_t i = 0; i < M.rows(); ++i)
            for (std::size_t j = 0; j < M.cols(); ++j) {
                const auto& v = M.at(i, j).exact_value().re;
                g.set(i, j, Scalar::gf2(v.get_num() % 2 != 0));
            }
        samples.push_back(bench_gf2("schur-n8-gf2", g));
    }
    // Dense random rational catalecticant-style matrices.
    for (std::size_t size : {40, 80}) {
        Mat M(size, size, Mode::exact);
        SplitMix64 rng(17);
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j)
                M.set(i, j, Scalar::exact(rng.in_range(-999, 999)));
        samples.push_back(bench_exact(size == 40 ? "random-40" : "random-80", M));
    }

    std::printf("%-18s %9s %9s %12s %12s %9s\n", "kernel", "rows", "cols", "serial[s]",
                "openmp[s]", "rank");
    for (const auto& s : samples)
        std::printf("%-18s %9zu %9zu %12.4f %12.4f %9zu\n", s.name, s.rows, s.cols, s.serial_s,
                    s.parallel_s, s.rank);
    return 0;
}
