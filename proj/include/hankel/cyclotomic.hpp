#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "hankel/numbers.hpp"

namespace hankel {

// Exact arithmetic in the cyclotomic field Q(zeta_N), elements represented
// on the power basis 1, zeta, ..., zeta^{phi(N)-1} modulo the N-th
// cyclotomic polynomial. Used where Vandermonde nodes are roots of unity,
// which a Gaussian-rational Scalar cannot hold exactly.
class CycloField {
public:
    static const CycloField& get(unsigned N);  // cached per N

    unsigned order() const { return N_; }
    unsigned degree() const { return deg_; }
    const std::vector<Rat>& modulus() const { return phi_; }  // monic, ascending

    // zeta^k reduced to the power basis.
    std::vector<Rat> zeta_power(long k) const;

private:
    explicit CycloField(unsigned N);
    unsigned N_;
    unsigned deg_;
    std::vector<Rat> phi_;
    std::vector<std::vector<Rat>> zeta_pow_table_;  // zeta^k for k = 0..N-1
};

class Cyc {
public:
    Cyc() : F_(nullptr) {}
    explicit Cyc(const CycloField& F) : F_(&F), c_(F.degree(), Rat(0)) {}
    static Cyc from_rat(const CycloField& F, const Rat& r);
    static Cyc from_gauss(const CycloField& F, const GaussRat& g);  // needs 4 | N when im != 0
    static Cyc zeta(const CycloField& F, long k = 1);

    const CycloField& field() const { return *F_; }
    bool is_zero() const;
    const std::vector<Rat>& coords() const { return c_; }

    Cyc operator-() const;
    friend Cyc operator+(const Cyc& a, const Cyc& b);
    friend Cyc operator-(const Cyc& a, const Cyc& b);
    friend Cyc operator*(const Cyc& a, const Cyc& b);
    friend Cyc operator/(const Cyc& a, const Cyc& b);
    friend bool operator==(const Cyc& a, const Cyc& b);
    Cyc inv() const;
    Cyc pow(unsigned long e) const;

    std::complex<double> to_complex() const;
    // Exact image in Q(i) when the element lies in that subfield.
    std::optional<GaussRat> to_gauss() const;

private:
    const CycloField* F_;
    std::vector<Rat> c_;
    void check_same(const Cyc& o) const;
};

}  // namespace hankel
