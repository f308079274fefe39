#pragma once

#include <cstdint>
#include <vector>

#include "heiszeta/errors.hpp"

namespace heiszeta {

enum class RingBranch { Mod23, Mod1 };
enum class PrimeClass { Inert, Split, Ramified };

const char* to_string(PrimeClass c);

// The ring of integers O = Z[omega] of Q[sqrt(d)] for square-free d.
// omega = sqrt(d) when d = 2,3 mod 4 and (1+sqrt(d))/2 when d = 1 mod 4;
// in both branches omega^2 = trace_t*omega + norm_n.
struct QuadRing {
    std::int64_t d = 0;
    RingBranch branch = RingBranch::Mod23;
    std::int64_t trace_t = 0;       // 0 (Mod23) or 1 (Mod1)
    std::int64_t norm_n = 0;        // d (Mod23) or (d-1)/4 (Mod1)
    std::int64_t discriminant = 0;  // 4d (Mod23) or d (Mod1)
};

QuadRing make_ring(std::int64_t d);

// Monic quadratic x^2 + b*x + c over Z.
struct Quadratic {
    std::int64_t b = 0;
    std::int64_t c = 0;

    // f(x) reduced to the canonical residue in [0, mod).
    std::int64_t eval_mod(std::int64_t x, std::int64_t mod) const;

    bool operator==(const Quadratic&) const = default;
};

// x^2 - trace_t*x - norm_n; rational primes are classified by its root
// count mod p (0 inert, 1 ramified, 2 split).
Quadratic splitting_poly(const QuadRing& ring);

bool is_prime(std::int64_t p);
PrimeClass classify_prime(const QuadRing& ring, std::int64_t p);

// Element a + b*omega of O/(p^k); canonical residues 0 <= a,b < modulus.
struct RingElem {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::int64_t modulus = 1;

    bool operator==(const RingElem&) const = default;
};

RingElem elem_make(std::int64_t a, std::int64_t b, std::int64_t modulus);
RingElem elem_add(const RingElem& x, const RingElem& y);
RingElem elem_neg(const RingElem& x);
RingElem elem_mul(const QuadRing& ring, const RingElem& x, const RingElem& y);

// Shared modular helpers.
std::int64_t mod_reduce(std::int64_t v, std::int64_t m);
std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m);
std::int64_t mod_inv(std::int64_t a, std::int64_t m);
std::int64_t mod_pow(std::int64_t base, std::int64_t e, std::int64_t m);
std::int64_t ipow_checked(std::int64_t base, int e);

}  // namespace heiszeta
