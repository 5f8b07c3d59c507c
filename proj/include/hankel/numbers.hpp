#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>

#include "hankel/errors.hpp"

namespace hankel {

using Int = mpz_class;
using Rat = mpq_class;

// mpq_class(p, q) does not canonicalize on its own.
inline Rat make_rat(long p, long q = 1) {
    if (q == 0) throw DomainError("rational with zero denominator");
    Rat r(p, q);
    r.canonicalize();
    return r;
}

inline Rat make_rat(const Int& p, const Int& q) {
    if (q == 0) throw DomainError("rational with zero denominator");
    Rat r(p);
    r /= Rat(q);
    return r;
}

inline double to_double(const Rat& r) { return mpq_get_d(r.get_mpq_t()); }

std::string rat_to_string(const Rat& r);   // "p" or "p/q", q > 0
Rat rat_from_string(const std::string& s);  // accepts "p" and "p/q"

// Exact complex rational: re + im*i with components in lowest terms.
struct GaussRat {
    Rat re{0};
    Rat im{0};

    GaussRat() = default;
    GaussRat(Rat r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
    static GaussRat integer(long v) { return GaussRat(Rat(v)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }
    GaussRat conj() const { return {re, -im}; }
    Rat norm2() const { return re * re + im * im; }

    GaussRat operator-() const { return {-re, -im}; }
    GaussRat& operator+=(const GaussRat& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    GaussRat& operator-=(const GaussRat& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    GaussRat& operator*=(const GaussRat& o) {
        Rat r = re * o.re - im * o.im;
        Rat i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    GaussRat& operator/=(const GaussRat& o) {
        if (o.is_zero()) throw DomainError("division by zero exact scalar");
        Rat n = o.norm2();
        Rat r = (re * o.re + im * o.im) / n;
        Rat i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
    friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
    friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
    friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {to_double(re), to_double(im)}; }
};

std::string gauss_to_string(const GaussRat& g);   // "p/q" or "p/q+r/s i"
GaussRat gauss_from_string(const std::string& s);

// Gaussian integer, the working type of fraction-free elimination.
struct GaussInt {
    Int re{0};
    Int im{0};

    GaussInt() = default;
    GaussInt(Int r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GaussInt(Int r, Int i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    Int norm2() const { return re * re + im * im; }
    // Rough magnitude proxy used for pivot selection.
    std::size_t bits() const {
        return mpz_sizeinbase(re.get_mpz_t(), 2) + mpz_sizeinbase(im.get_mpz_t(), 2);
    }

    GaussInt operator-() const { return {-re, -im}; }
    friend GaussInt operator+(const GaussInt& a, const GaussInt& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussInt operator-(const GaussInt& a, const GaussInt& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const GaussInt& a, const GaussInt& b) {
        return a.re == b.re && a.im == b.im;
    }
};

// Exact quotient a/b in Z[i]; only valid when b divides a (as in Bareiss steps).
GaussInt divexact(const GaussInt& a, const GaussInt& b);

// Deterministic, platform-independent pseudo-random stream.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    // Uniform-ish integer in [lo, hi]; modulo bias is irrelevant at our ranges.
    long in_range(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

std::uint64_t binomial(unsigned n, unsigned k);

}  // namespace hankel
