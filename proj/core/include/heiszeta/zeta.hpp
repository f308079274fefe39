#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "heiszeta/isoclass.hpp"

namespace heiszeta {

// Dense polynomial in one variable over Z (used for the P direction).
struct ZPoly {
    std::vector<mpz_class> c;  // ascending degree

    void trim();
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    mpz_class eval(const mpz_class& x) const;
    bool operator==(const ZPoly&) const = default;
};

// Polynomial in T with Z[P] coefficients: sum t[k] * T^k.
struct BiPoly {
    std::vector<ZPoly> t;

    void trim();
    bool is_zero() const { return t.empty(); }
    bool is_one() const;
    int deg_t() const { return static_cast<int>(t.size()) - 1; }
    int deg_p() const;
    bool operator==(const BiPoly&) const = default;
};

BiPoly bp_add(const BiPoly& a, const BiPoly& b);
BiPoly bp_sub(const BiPoly& a, const BiPoly& b);
BiPoly bp_mul(const BiPoly& a, const BiPoly& b);
BiPoly bp_gcd(const BiPoly& a, const BiPoly& b);
BiPoly bp_one();
// Builder: coefficient lists per T power, each ascending in P.
BiPoly bp_make(const std::vector<std::vector<long>>& coeffs);

// Normalized quotient of two BiPoly: gcd removed, sign fixed so the
// denominator's lexicographically-first (T asc, then P asc) coefficient is
// positive. Equality of rational functions is equality of normalized pairs.
struct BiRational {
    BiPoly num;
    BiPoly den;

    BiRational() : num(bp_one()), den(bp_one()) {}
    BiRational(BiPoly n, BiPoly d);

    bool operator==(const BiRational&) const = default;
};

BiRational rat_mul(const BiRational& a, const BiRational& b);
BiRational rat_div(const BiRational& a, const BiRational& b);
std::string to_string(const BiRational& f);

// The p-local twist-isoclass zeta factor in P (= p) and T (= p^-s).
BiRational local_factor(PrimeClass cls);
// The p-local Dedekind factor of the quadratic field.
BiRational dedekind_local(PrimeClass cls);
// Substitute s -> s-1, i.e. T -> P*T.
BiRational shift_s_minus_1(const BiRational& f);
// local_factor == shift_s_minus_1(dedekind_local) / dedekind_local.
bool check_local_identity(PrimeClass cls);

// The integer gamma with Z(1/P, 1/T) = P^gamma * Z(P, T); throws
// NoCleanFunctionalEquation when the quotient is not a pure power of P.
int functional_equation_exponent(const BiRational& f);
int functional_equation_exponent(PrimeClass cls);

// Coefficients of T^0..T^N after substituting P = p.
std::vector<mpz_class> series_expand(const BiRational& f, std::int64_t p, int N);

// Exact 1-indexed Dirichlet coefficient array (index 0 unused).
struct DirichletCoeffs {
    std::int64_t N = 0;
    std::vector<mpz_class> a;

    const mpz_class& at(std::int64_t n) const { return a[static_cast<std::size_t>(n)]; }
};

// a_n = number of ideals of norm n, assembled from the local Euler factors.
DirichletCoeffs dedekind_coeffs(const QuadRing& ring, std::int64_t N);
DirichletCoeffs dirichlet_convolve(const DirichletCoeffs& x, const DirichletCoeffs& y);
DirichletCoeffs dirichlet_inverse(const DirichletCoeffs& x);  // needs x_1 = 1

// Coefficients of zeta_K(s-1)/zeta_K(s) up to N.
DirichletCoeffs quotient_series_coeffs(const QuadRing& ring, std::int64_t N);
// quotient_series_coeffs(n) == r_coeff(n) for all n <= N.
bool check_global_identity(const QuadRing& ring, std::int64_t N);

}  // namespace heiszeta
