#pragma once

#include <complex>
#include <optional>
#include <variant>
#include <vector>

#include "hankel/cyclotomic.hpp"
#include "hankel/polynomial.hpp"
#include "hankel/scalar.hpp"

namespace hankel {

// Binary form with plain monomial coefficients (no binomial weights):
//   f(x,y) = c_0 x^k + c_1 x^{k-1} y + ... + c_k y^k.
struct KernelForm {
    std::size_t k = 0;
    std::vector<Scalar> coeffs;  // size k+1
    Mode mode() const { return coeffs.empty() ? Mode::exact : coeffs.front().mode(); }
    bool is_zero() const;
};

KernelForm kernel_form(std::vector<Scalar> coeffs);  // normalizes first nonzero to 1

struct ProjectiveRoot {
    Scalar a, b;  // canonical: b = 1 if b != 0, else (a, b) = (1, 0)
    unsigned multiplicity = 1;
};

// No repeated projective root. Exact mode: multiplicity at (1,0) (leading
// zero count) must be <= 1 and gcd(p, p') constant for p(t) = f(t,1).
// Float mode: companion-matrix roots clustered at relative tolerance.
bool is_squarefree(const KernelForm& f, double tol = 1e-8);

// All projective roots with multiplicity, summing to k. Exact coefficients
// take the exact route (rational / quadratic / root-of-unity patterns) and
// fall back to float companion-matrix eigenvalues otherwise.
std::vector<ProjectiveRoot> projective_roots(const KernelForm& f, double tol = 1e-9);

namespace roots_detail {

// A root in exact form: either a Gaussian rational or scale * zeta_N^power.
struct CycRootSpec {
    unsigned N;
    unsigned power;
    Rat scale;
};
struct ExactRoot {
    std::variant<GaussRat, CycRootSpec> a;
    bool at_infinity = false;  // (1, 0)
    unsigned multiplicity = 1;
};
struct ExactRootsResult {
    bool ok = false;
    std::vector<ExactRoot> roots;
    unsigned lcm_order = 1;  // lcm of cyclotomic orders involved
};

ExactRootsResult exact_projective_roots(const KernelForm& f);

std::optional<GaussRat> gauss_sqrt(const GaussRat& z);
std::optional<Rat> rational_nth_root(const Rat& r, unsigned n);

// Eigenvalues of the companion matrix of a monic polynomial (ascending
// coefficients, constant first, without the leading 1).
std::vector<std::complex<double>> companion_eigenvalues(
    std::vector<std::complex<double>> monic_tail);

XPoly dehomogenize(const KernelForm& f);  // p(t) = f(t, 1), ascending

}  // namespace roots_detail

}  // namespace hankel
