#pragma once

#include "heiszeta/congruence.hpp"

namespace heiszeta {

enum class IsoCase { Case1 = 1, Case2 = 2 };

// Canonical parameters of a twist isoclass of dimension p^n.
//
// The scalar images of the two central generators are zeta^lambda_exp and
// zeta^mu_exp for zeta a fixed primitive p^r-th root of unity; the triple
// (lambda_exp, mu_exp, m) identifies the isoclass. Case1 carries a primitive
// lambda (lambda_exp = u a unit, mu_exp = u*l), Case2 a primitive mu
// (mu_exp = u, lambda_exp = u*l with l a non-unit) and occurs only at r = m.
struct IsoclassLabel {
    std::int64_t p = 2;
    int n = 0;
    int r = 0;
    int m = 0;
    IsoCase kase = IsoCase::Case1;
    std::int64_t u = 0;
    std::int64_t l = 0;
    std::int64_t lambda_exp = 0;
    std::int64_t mu_exp = 0;
};

struct IsoclassCensus {
    std::int64_t p = 2;
    int n = 0;
    std::int64_t count = 0;
    // Labels are filled only when count <= the materialization cap; the count
    // itself is always exact.
    bool materialized = false;
    std::vector<IsoclassLabel> labels;
};

// Enumerate the isoclasses of dimension p^n: the union over r+m = n, r >= m
// of Case1 labels satisfying the valuation condition ord_p f(l) = r-m
// (>= r when m = 0) with f the splitting polynomial, plus the Case2 labels at
// r = m. Labels are ordered by (r, case, u, l).
IsoclassCensus enumerate(const QuadRing& ring, std::int64_t p, int n,
                         std::int64_t materialize_cap = 200'000);

// The closed-form count: inert (1+1/p)Phi(p^n) for even n else 0;
// split Phi(p^n)[n(1-1/p) + 1 + 1/p]; ramified Phi(p^n); 1 at n = 0.
std::int64_t closed_form_count(const QuadRing& ring, std::int64_t p, int n);

// r_n assembled multiplicatively over the prime powers of n.
std::int64_t r_coeff(const QuadRing& ring, std::int64_t n);

// Audit every typed invariant of a label; used by tests and by repbuild.
bool check_label(const QuadRing& ring, const IsoclassLabel& lab);

std::int64_t euler_phi_prime_power(std::int64_t p, int a);

}  // namespace heiszeta
