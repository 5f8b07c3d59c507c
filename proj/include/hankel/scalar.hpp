#pragma once

#include <complex>
#include <string>

#include "hankel/numbers.hpp"

namespace hankel {

enum class Mode { exact, fp, gf2 };

inline const char* mode_name(Mode m) {
    switch (m) {
        case Mode::exact: return "exact";
        case Mode::fp: return "float";
        case Mode::gf2: return "gf2";
    }
    return "?";
}

Mode mode_from_name(const std::string& s);

// Tagged scalar in one of three arithmetic modes. Cross-mode arithmetic
// throws ModeError; nothing is ever coerced silently.
class Scalar {
public:
    Scalar() : mode_(Mode::exact) {}
    static Scalar exact(GaussRat v) {
        Scalar s;
        s.mode_ = Mode::exact;
        s.ex_ = std::move(v);
        return s;
    }
    static Scalar exact(long v) { return exact(GaussRat::integer(v)); }
    static Scalar fp(std::complex<double> v) {
        Scalar s;
        s.mode_ = Mode::fp;
        s.f_ = v;
        return s;
    }
    static Scalar gf2(bool bit) {
        Scalar s;
        s.mode_ = Mode::gf2;
        s.bit_ = bit;
        return s;
    }
    static Scalar zero(Mode m);
    static Scalar one(Mode m);

    Mode mode() const { return mode_; }
    const GaussRat& exact_value() const {
        require(Mode::exact);
        return ex_;
    }
    std::complex<double> fp_value() const {
        require(Mode::fp);
        return f_;
    }
    bool gf2_value() const {
        require(Mode::gf2);
        return bit_;
    }

    bool is_zero() const;
    // Numeric view in any mode (gf2 -> 0/1); exact parts converted.
    std::complex<double> to_complex() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string to_string() const;

private:
    void require(Mode m) const {
        if (mode_ != m)
            throw ModeError(std::string("expected ") + mode_name(m) + " scalar, got " +
                            mode_name(mode_));
    }
    void require_same(const Scalar& o) const {
        if (mode_ != o.mode_)
            throw ModeError(std::string("mixed-mode arithmetic: ") + mode_name(mode_) + " vs " +
                            mode_name(o.mode_));
    }

    Mode mode_;
    GaussRat ex_;
    std::complex<double> f_{0.0, 0.0};
    bool bit_ = false;
};

}  // namespace hankel
