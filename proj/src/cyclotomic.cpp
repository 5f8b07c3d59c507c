#include "hankel/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace hankel {

namespace {

using RPoly = std::vector<Rat>;  // ascending, over Q

void trim(RPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

RPoly mul(const RPoly& a, const RPoly& b) {
    if (a.empty() || b.empty()) return {};
    RPoly r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

// Exact quotient; remainder must come out zero for the callers below.
RPoly divexact_poly(RPoly a, const RPoly& b) {
    RPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rat(0));
    while (a.size() >= b.size() && !a.empty()) {
        Rat c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    if (!a.empty()) throw InvariantError("cyclotomic polynomial division left a remainder");
    return q;
}

RPoly x_pow_minus_one(unsigned n) {
    RPoly p(n + 1, Rat(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

RPoly cyclotomic_poly(unsigned N) {
    // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d.
    if (N == 1) return {Rat(-1), Rat(1)};
    RPoly num = x_pow_minus_one(N);
    for (unsigned d = 1; d < N; ++d)
        if (N % d == 0) num = divexact_poly(std::move(num), cyclotomic_poly(d));
    return num;
}

// Reduce a polynomial in zeta modulo Phi_N.
RPoly reduce_mod(RPoly a, const RPoly& phi) {
    const std::size_t deg = phi.size() - 1;
    while (a.size() > deg) {
        Rat c = a.back() / phi.back();
        std::size_t shift = a.size() - phi.size();
        for (std::size_t i = 0; i < phi.size(); ++i) a[shift + i] -= c * phi[i];
        trim(a);
    }
    a.resize(deg, Rat(0));
    return a;
}

}  // namespace

CycloField::CycloField(unsigned N) : N_(N) {
    if (N == 0) throw DomainError("cyclotomic order must be positive");
    phi_ = cyclotomic_poly(N);
    deg_ = static_cast<unsigned>(phi_.size() - 1);
    zeta_pow_table_.resize(N);
    RPoly cur{Rat(1)};
    for (unsigned k = 0; k < N; ++k) {
        zeta_pow_table_[k] = cur;
        zeta_pow_table_[k].resize(deg_, Rat(0));
        cur.insert(cur.begin(), Rat(0));  // multiply by zeta
        cur = reduce_mod(std::move(cur), phi_);
    }
}

const CycloField& CycloField::get(unsigned N) {
    static std::map<unsigned, CycloField*> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it == cache.end()) it = cache.emplace(N, new CycloField(N)).first;
    return *it->second;
}

std::vector<Rat> CycloField::zeta_power(long k) const {
    long r = k % static_cast<long>(N_);
    if (r < 0) r += N_;
    return zeta_pow_table_[static_cast<std::size_t>(r)];
}

void Cyc::check_same(const Cyc& o) const {
    if (F_ == nullptr || o.F_ == nullptr || F_->order() != o.F_->order())
        throw InvariantError("cyclotomic arithmetic across different fields");
}

Cyc Cyc::from_rat(const CycloField& F, const Rat& r) {
    Cyc v(F);
    v.c_[0] = r;
    return v;
}

Cyc Cyc::from_gauss(const CycloField& F, const GaussRat& g) {
    Cyc v = from_rat(F, g.re);
    if (g.im != 0) {
        if (F.order() % 4 != 0)
            throw InvariantError("embedding a strictly complex value needs 4 | N");
        Cyc i = zeta(F, static_cast<long>(F.order() / 4));
        Cyc im = from_rat(F, g.im);
        v = v + im * i;
    }
    return v;
}

Cyc Cyc::zeta(const CycloField& F, long k) {
    Cyc v(F);
    v.c_ = F.zeta_power(k);
    return v;
}

bool Cyc::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

Cyc Cyc::operator-() const {
    Cyc r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyc operator+(const Cyc& a, const Cyc& b) {
    a.check_same(b);
    Cyc r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

Cyc operator-(const Cyc& a, const Cyc& b) {
    a.check_same(b);
    Cyc r = a;
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
    return r;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
    a.check_same(b);
    RPoly prod = mul(a.c_, b.c_);
    prod = reduce_mod(std::move(prod), a.F_->modulus());
    Cyc r(*a.F_);
    r.c_ = std::move(prod);
    r.c_.resize(a.F_->degree(), Rat(0));
    return r;
}

Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inv(); }

bool operator==(const Cyc& a, const Cyc& b) {
    a.check_same(b);
    return a.c_ == b.c_;
}

Cyc Cyc::inv() const {
    if (is_zero()) throw DomainError("inverse of zero cyclotomic element");
    // Extended Euclid in Q[x] against the (irreducible) modulus.
    RPoly r0 = F_->modulus(), r1 = c_;
    trim(r1);
    RPoly t0, t1{Rat(1)};
    while (!r1.empty()) {
        // r0 = q r1 + r2
        RPoly q;
        RPoly rem = r0;
        if (rem.size() >= r1.size()) q.assign(rem.size() - r1.size() + 1, Rat(0));
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rat cq = rem.back() / r1.back();
            std::size_t shift = rem.size() - r1.size();
            q[shift] += cq;
            for (std::size_t i = 0; i < r1.size(); ++i) rem[shift + i] -= cq * r1[i];
            trim(rem);
        }
        // (t0, t1) <- (t1, t0 - q t1)
        RPoly qt = mul(q, t1);
        RPoly t2(std::max(t0.size(), qt.size()), Rat(0));
        for (std::size_t i = 0; i < t2.size(); ++i) {
            if (i < t0.size()) t2[i] += t0[i];
            if (i < qt.size()) t2[i] -= qt[i];
        }
        trim(t2);
        t0 = std::move(t1);
        t1 = std::move(t2);
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
    // r0 is a nonzero constant gcd (the modulus is irreducible).
    if (r0.size() != 1) throw InvariantError("cyclotomic inverse: gcd not constant");
    Cyc out(*F_);
    RPoly t = reduce_mod(std::move(t0), F_->modulus());
    for (std::size_t i = 0; i < t.size() && i < out.c_.size(); ++i) out.c_[i] = t[i] / r0[0];
    return out;
}

Cyc Cyc::pow(unsigned long e) const {
    Cyc base = *this;
    Cyc acc = from_rat(*F_, Rat(1));
    while (e) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

std::complex<double> Cyc::to_complex() const {
    const double theta = 2.0 * M_PI / static_cast<double>(F_->order());
    std::complex<double> zeta(std::cos(theta), std::sin(theta));
    std::complex<double> acc = 0.0, zp = 1.0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        acc += to_double(c_[i]) * zp;
        zp *= zeta;
    }
    return acc;
}

std::optional<GaussRat> Cyc::to_gauss() const {
    // Solve c = q * e0 + r * embed(i) exactly when possible.
    if (F_->order() % 4 != 0) {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i] != 0) return std::nullopt;
        return GaussRat(c_[0]);
    }
    std::vector<Rat> iv = F_->zeta_power(static_cast<long>(F_->order() / 4));
    // Basis vectors e0 and iv; coordinates beyond those must vanish.
    Rat q = c_[0], r(0);
    // Find a coordinate where iv is nonzero away from index 0 to pin r.
    std::size_t pin = 0;
    for (std::size_t i = 1; i < iv.size(); ++i)
        if (iv[i] != 0) {
            pin = i;
            break;
        }
    if (pin == 0) {
        // i is rational in this field only if N <= 2, which contradicts 4 | N.
        throw InvariantError("unexpected rational imaginary unit");
    }
    r = c_[pin] / iv[pin];
    q = c_[0] - r * iv[0];
    // Verify the remaining coordinates.
    for (std::size_t i = 1; i < c_.size(); ++i) {
        Rat expect = r * iv[i];
        if (c_[i] != expect) return std::nullopt;
    }
    return GaussRat(q, r);
}

}  // namespace hankel
