#include "hankel/numbers.hpp"

#include <cstddef>

namespace hankel {

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational literal");
    Rat r;
    if (mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw ParseError("bad rational literal '" + s + "'");
    if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string gauss_to_string(const GaussRat& g) {
    if (g.im == 0) return rat_to_string(g.re);
    std::string im = rat_to_string(g.im < 0 ? Rat(-g.im) : g.im);
    return rat_to_string(g.re) + (g.im < 0 ? "-" : "+") + im + " i";
}

GaussRat gauss_from_string(const std::string& raw) {
    // Strip blanks; the canonical form is "p/q" or "p/q+r/s i".
    std::string s;
    for (char c : raw)
        if (c != ' ' && c != '\t') s.push_back(c);
    if (s.empty()) throw ParseError("empty scalar literal");
    bool has_i = false;
    if (s.back() == 'i') {
        has_i = true;
        s.pop_back();
        if (s.empty()) return GaussRat(Rat(0), Rat(1));
    }
    if (!has_i) return GaussRat(rat_from_string(s));
    // Split at the sign that separates real and imaginary parts (skip leading
    // sign and signs inside exponents do not occur for rationals).
    std::size_t split = std::string::npos;
    for (std::size_t k = 1; k < s.size(); ++k) {
        if (s[k] == '+' || s[k] == '-') split = k;  // last top-level sign
    }
    if (split == std::string::npos) {
        // Pure imaginary: "r/s i".
        return GaussRat(Rat(0), rat_from_string(s));
    }
    Rat re = rat_from_string(s.substr(0, split));
    std::string imtxt = s.substr(split + 1);
    Rat im = imtxt.empty() ? Rat(1) : rat_from_string(imtxt);
    if (s[split] == '-') im = -im;
    return {re, im};
}

GaussInt divexact(const GaussInt& a, const GaussInt& b) {
    if (b.is_zero()) throw DomainError("exact division by zero");
    if (b.im == 0) {
        GaussInt q;
        mpz_divexact(q.re.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
        mpz_divexact(q.im.get_mpz_t(), a.im.get_mpz_t(), b.re.get_mpz_t());
        return q;
    }
    // a/b = a * conj(b) / |b|^2, both component divisions exact by assumption.
    GaussInt num = a * GaussInt{b.re, -b.im};
    Int n = b.norm2();
    GaussInt q;
    mpz_divexact(q.re.get_mpz_t(), num.re.get_mpz_t(), n.get_mpz_t());
    mpz_divexact(q.im.get_mpz_t(), num.im.get_mpz_t(), n.get_mpz_t());
    return q;
}

std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;  // exact at every step
    }
    return r;
}

}  // namespace hankel
