#include "hankel/scalar.hpp"

namespace hankel {

Mode mode_from_name(const std::string& s) {
    if (s == "exact") return Mode::exact;
    if (s == "float") return Mode::fp;
    if (s == "gf2") return Mode::gf2;
    throw ParseError("unknown mode '" + s + "'");
}

Scalar Scalar::zero(Mode m) {
    switch (m) {
        case Mode::exact: return exact(0);
        case Mode::fp: return fp({0.0, 0.0});
        case Mode::gf2: return gf2(false);
    }
    return {};
}

Scalar Scalar::one(Mode m) {
    switch (m) {
        case Mode::exact: return exact(1);
        case Mode::fp: return fp({1.0, 0.0});
        case Mode::gf2: return gf2(true);
    }
    return {};
}

bool Scalar::is_zero() const {
    switch (mode_) {
        case Mode::exact: return ex_.is_zero();
        case Mode::fp: return f_ == std::complex<double>(0.0, 0.0);
        case Mode::gf2: return !bit_;
    }
    return true;
}

std::complex<double> Scalar::to_complex() const {
    switch (mode_) {
        case Mode::exact: return ex_.to_complex();
        case Mode::fp: return f_;
        case Mode::gf2: return {bit_ ? 1.0 : 0.0, 0.0};
    }
    return {};
}

Scalar Scalar::operator-() const {
    switch (mode_) {
        case Mode::exact: return exact(-ex_);
        case Mode::fp: return fp(-f_);
        case Mode::gf2: return gf2(bit_);  // -x = x over GF(2)
    }
    return {};
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same(o);
    switch (mode_) {
        case Mode::exact: ex_ += o.ex_; break;
        case Mode::fp: f_ += o.f_; break;
        case Mode::gf2: bit_ ^= o.bit_; break;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_same(o);
    switch (mode_) {
        case Mode::exact: ex_ -= o.ex_; break;
        case Mode::fp: f_ -= o.f_; break;
        case Mode::gf2: bit_ ^= o.bit_; break;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same(o);
    switch (mode_) {
        case Mode::exact: ex_ *= o.ex_; break;
        case Mode::fp: f_ *= o.f_; break;
        case Mode::gf2: bit_ &= o.bit_; break;
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    require_same(o);
    switch (mode_) {
        case Mode::exact: ex_ /= o.ex_; break;
        case Mode::fp:
            if (o.f_ == std::complex<double>(0.0, 0.0))
                throw DomainError("division by zero float scalar");
            f_ /= o.f_;
            break;
        case Mode::gf2:
            if (!o.bit_) throw DomainError("division by zero over GF(2)");
            break;  // dividing by 1 is the identity
    }
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.mode_ != b.mode_) return false;
    switch (a.mode_) {
        case Mode::exact: return a.ex_ == b.ex_;
        case Mode::fp: return a.f_ == b.f_;
        case Mode::gf2: return a.bit_ == b.bit_;
    }
    return false;
}

std::string Scalar::to_string() const {
    switch (mode_) {
        case Mode::exact: return gauss_to_string(ex_);
        case Mode::fp: {
            std::string s = "(" + std::to_string(f_.real()) + "," + std::to_string(f_.imag()) + ")";
            return s;
        }
        case Mode::gf2: return bit_ ? "1" : "0";
    }
    return {};
}

}  // namespace hankel
