#include "hankel/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace hankel {

Scalar HankelTensor::at(const std::vector<std::size_t>& idx) const {
    if (idx.size() != m) throw DimensionError("index tuple length != order");
    std::size_t sum = 0;
    for (std::size_t v : idx) {
        if (v < 1 || v > n) throw DimensionError("index out of range");
        sum += v;
    }
    return h[sum - m];
}

bool HankelTensor::is_zero() const {
    return std::all_of(h.begin(), h.end(), [](const Scalar& s) { return s.is_zero(); });
}

HankelTensor hankel_from_h(std::size_t n, std::size_t m, std::vector<Scalar> h) {
    if (n < 2) throw DimensionError("hankel tensor needs dimension >= 2");
    if (m < 1) throw DimensionError("hankel tensor needs order >= 1");
    if (h.size() != (n - 1) * m + 1)
        throw DimensionError("generating vector must have length (n-1)m+1 = " +
                             std::to_string((n - 1) * m + 1) + ", got " +
                             std::to_string(h.size()));
    Mode mode = h.empty() ? Mode::exact : h.front().mode();
    for (const auto& s : h)
        if (s.mode() != mode) throw ModeError("mixed-mode generating vector");
    return HankelTensor{n, m, std::move(h)};
}

BinaryForm to_binary_form(const HankelTensor& H) { return BinaryForm{H.degree(), H.h}; }

HankelTensor from_binary_form(const BinaryForm& b, std::size_t n, std::size_t m) {
    if (b.d != (n - 1) * m)
        throw DimensionError("binary form degree " + std::to_string(b.d) +
                             " incompatible with (n,m)");
    return hankel_from_h(n, m, b.coeffs);
}

std::vector<Scalar> vandermonde_vector(const Scalar& a, const Scalar& b, std::size_t n) {
    if (a.is_zero() && b.is_zero()) throw DomainError("vandermonde vector of (0,0)");
    if (a.mode() != b.mode()) throw ModeError("vandermonde vector with mixed modes");
    std::vector<Scalar> v(n, Scalar::one(a.mode()));
    // v_i = a^{i-1} b^{n-i}, built from both ends.
    for (std::size_t i = 1; i < n; ++i) v[i] = v[i - 1] * a;
    Scalar bp = Scalar::one(a.mode());
    for (std::size_t i = n; i-- > 0;) {
        v[i] = v[i] * bp;
        bp = bp * b;
    }
    return v;
}

namespace {

std::vector<Scalar> reconstruct_h_scalar(const VandermondeDecomposition& dec, Mode mode) {
    const std::size_t d = (dec.n - 1) * dec.m;
    std::vector<Scalar> h(d + 1, Scalar::zero(mode));
    for (const auto& t : dec.terms) {
        Scalar apow = Scalar::one(mode);
        std::vector<Scalar> acc(d + 1);
        for (std::size_t j = 0; j <= d; ++j) {
            acc[j] = apow;
            apow = apow * t.a;
        }
        Scalar bpow = Scalar::one(mode);
        for (std::size_t j = d + 1; j-- > 0;) {
            h[j] += t.lambda * acc[j] * bpow;
            bpow = bpow * t.b;
        }
    }
    return h;
}

}  // namespace

HankelTensor reconstruct(const VandermondeDecomposition& dec) {
    const std::size_t d = (dec.n - 1) * dec.m;
    if (dec.cyc_terms.has_value()) {
        // Exact reconstruction in the cyclotomic field; the result must land
        // back in Q(i) since generating vectors are Gaussian rational.
        if (dec.cyc_terms->empty()) {
            return hankel_from_h(dec.n, dec.m, std::vector<Scalar>(d + 1, Scalar::exact(0)));
        }
        const CycloField& F = dec.cyc_terms->front().lambda.field();
        std::vector<Cyc> h(d + 1, Cyc(F));
        for (const auto& t : *dec.cyc_terms) {
            Cyc apow = Cyc::from_rat(F, Rat(1));
            std::vector<Cyc> acc;
            acc.reserve(d + 1);
            for (std::size_t j = 0; j <= d; ++j) {
                acc.push_back(apow);
                apow = apow * t.a;
            }
            Cyc bpow = Cyc::from_rat(F, Rat(1));
            for (std::size_t j = d + 1; j-- > 0;) {
                h[j] = h[j] + t.lambda * acc[j] * bpow;
                bpow = bpow * t.b;
            }
        }
        std::vector<Scalar> hs;
        hs.reserve(d + 1);
        for (const auto& c : h) {
            auto g = c.to_gauss();
            if (!g.has_value())
                throw InvariantError("cyclotomic reconstruction left the Gaussian subfield");
            hs.push_back(Scalar::exact(*g));
        }
        return hankel_from_h(dec.n, dec.m, std::move(hs));
    }
    Mode mode = dec.terms.empty() ? Mode::exact : dec.terms.front().lambda.mode();
    return hankel_from_h(dec.n, dec.m, reconstruct_h_scalar(dec, mode));
}

std::size_t DenseSymmetricTensor::packed_size(std::size_t n, std::size_t m) {
    return static_cast<std::size_t>(binomial(static_cast<unsigned>(n + m - 1),
                                             static_cast<unsigned>(m)));
}

namespace {

// Rank of a sorted (non-decreasing) 1-based tuple among all such tuples
// in colex-compatible lexicographic order.
std::size_t rank_sorted_tuple(std::size_t n, const std::vector<std::size_t>& t) {
    std::size_t rank = 0;
    std::size_t prev = 1;
    std::size_t m = t.size();
    for (std::size_t pos = 0; pos < m; ++pos) {
        for (std::size_t v = prev; v < t[pos]; ++v) {
            // count sorted tuples of length m-pos-1 with entries >= v
            rank += static_cast<std::size_t>(
                binomial(static_cast<unsigned>(n - v + m - pos - 1),
                         static_cast<unsigned>(m - pos - 1)));
        }
        prev = t[pos];
    }
    return rank;
}

}  // namespace

Scalar DenseSymmetricTensor::at(std::vector<std::size_t> idx) const {
    if (idx.size() != m) throw DimensionError("index tuple length != order");
    std::sort(idx.begin(), idx.end());
    if (idx.front() < 1 || idx.back() > n) throw DimensionError("index out of range");
    return packed[rank_sorted_tuple(n, idx)];
}

std::vector<std::vector<std::size_t>> sorted_tuples(std::size_t n, std::size_t len) {
    std::vector<std::vector<std::size_t>> out;
    if (len == 0) return {{}};
    std::vector<std::size_t> cur(len, 1);
    while (true) {
        out.push_back(cur);
        std::size_t pos = len;
        while (pos-- > 0) {
            if (cur[pos] < n) {
                ++cur[pos];
                for (std::size_t k = pos + 1; k < len; ++k) cur[k] = cur[pos];
                break;
            }
            if (pos == 0) return out;
        }
    }
}

DenseSymmetricTensor dense(const HankelTensor& H) {
    DenseSymmetricTensor D;
    D.n = H.n;
    D.m = H.m;
    auto tuples = sorted_tuples(H.n, H.m);
    D.packed.reserve(tuples.size());
    for (const auto& t : tuples) D.packed.push_back(H.at(t));
    return D;
}

bool tensors_equal(const DenseSymmetricTensor& A, const DenseSymmetricTensor& B, double tol) {
    if (A.n != B.n || A.m != B.m) throw DimensionError("tensor shape mismatch");
    if (A.packed.size() != B.packed.size()) throw DimensionError("packed size mismatch");
    for (std::size_t k = 0; k < A.packed.size(); ++k) {
        const Scalar& a = A.packed[k];
        const Scalar& b = B.packed[k];
        if (a.mode() == Mode::exact && b.mode() == Mode::exact) {
            if (!(a == b)) return false;
        } else {
            if (std::abs(a.to_complex() - b.to_complex()) > tol) return false;
        }
    }
    return true;
}

HankelTensor random_hankel(std::size_t n, std::size_t m, std::uint64_t seed, long bound) {
    SplitMix64 rng(seed);
    std::vector<Scalar> h((n - 1) * m + 1);
    for (auto& s : h) s = Scalar::exact(rng.in_range(-bound, bound));
    return hankel_from_h(n, m, std::move(h));
}

namespace {

HankelTensor indicator(std::size_t n, std::size_t m, const std::vector<std::size_t>& ones) {
    std::vector<Scalar> h((n - 1) * m + 1, Scalar::exact(0));
    for (std::size_t l : ones) h.at(l) = Scalar::exact(1);
    return hankel_from_h(n, m, std::move(h));
}

}  // namespace

HankelTensor preset(const std::string& name, std::uint64_t seed, long bound) {
    std::vector<std::string> parts;
    std::stringstream ss(name);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw DomainError("empty preset name");
    const std::string& key = parts[0];
    auto arg = [&](std::size_t k) -> std::size_t {
        if (parts.size() <= k) throw DomainError("preset '" + key + "' needs a parameter");
        long v = 0;
        try {
            v = std::stol(parts[k]);
        } catch (const std::exception&) {
            throw DomainError("bad preset parameter '" + parts[k] + "'");
        }
        if (v < 1) throw DomainError("preset parameter must be positive");
        return static_cast<std::size_t>(v);
    };
    if (key == "ex35") return indicator(3, 2, {2});
    if (key == "ex36") return indicator(3, 3, {4});
    if (key == "ex37") {
        std::size_t m = arg(1);
        return indicator(3, m, {1, 2 * m});
    }
    if (key == "ex47") {
        std::size_t m = arg(1);
        return indicator(3, m, {2});
    }
    if (key == "thm52") {
        std::size_t n = arg(1);
        std::size_t r = (3 * n - 1) / 2;
        return indicator(n, 3, {r - 1});
    }
    if (key == "ex55") return indicator(3, 3, {5});
    if (key == "random") {
        std::size_t n = arg(1), m = arg(2);
        return random_hankel(n, m, seed, bound);
    }
    throw DomainError("unknown preset '" + key + "'");
}

}  // namespace hankel
