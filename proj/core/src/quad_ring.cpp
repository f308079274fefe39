#include "heiszeta/quad_ring.hpp"

#include <limits>

namespace heiszeta {

const char* to_string(PrimeClass c) {
    switch (c) {
        case PrimeClass::Inert:
            return "inert";
        case PrimeClass::Split:
            return "split";
        case PrimeClass::Ramified:
            return "ramified";
    }
    return "?";
}

std::int64_t mod_reduce(std::int64_t v, std::int64_t m) {
    std::int64_t r = v % m;
    return r < 0 ? r + m : r;
}

std::int64_t mod_mul(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m + m) % m;
}

std::int64_t mod_inv(std::int64_t a, std::int64_t m) {
    std::int64_t t = 0, nt = 1;
    std::int64_t r = m, nr = mod_reduce(a, m);
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw InputError("mod_inv: element not invertible");
    return mod_reduce(t, m);
}

std::int64_t mod_pow(std::int64_t base, std::int64_t e, std::int64_t m) {
    std::int64_t r = mod_reduce(1, m);
    base = mod_reduce(base, m);
    while (e > 0) {
        if (e & 1) r = mod_mul(r, base, m);
        base = mod_mul(base, base, m);
        e >>= 1;
    }
    return r;
}

std::int64_t ipow_checked(std::int64_t base, int e) {
    if (e < 0) throw InputError("ipow_checked: negative exponent");
    std::int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (base != 0 && r > std::numeric_limits<std::int64_t>::max() / base)
            throw TooLarge("ipow_checked: power overflows int64");
        r *= base;
    }
    return r;
}

QuadRing make_ring(std::int64_t d) {
    if (d == 0 || d == 1) throw InvalidD("d must be a square-free integer other than 0 and 1");
    std::int64_t a = d < 0 ? -d : d;
    for (std::int64_t q = 2; q * q <= a; ++q) {
        if (a % (q * q) == 0)
            throw NotSquareFree("d = " + std::to_string(d) + " has square factor " +
                                std::to_string(q * q));
    }
    QuadRing ring;
    ring.d = d;
    if (mod_reduce(d, 4) == 1) {
        ring.branch = RingBranch::Mod1;
        ring.trace_t = 1;
        ring.norm_n = (d - 1) / 4;
        ring.discriminant = d;
    } else {
        ring.branch = RingBranch::Mod23;
        ring.trace_t = 0;
        ring.norm_n = d;
        ring.discriminant = 4 * d;
    }
    return ring;
}

std::int64_t Quadratic::eval_mod(std::int64_t x, std::int64_t mod) const {
    __int128 v = static_cast<__int128>(x) * x + static_cast<__int128>(b) * x + c;
    __int128 r = v % mod;
    if (r < 0) r += mod;
    return static_cast<std::int64_t>(r);
}

Quadratic splitting_poly(const QuadRing& ring) {
    return Quadratic{-ring.trace_t, -ring.norm_n};
}

bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (std::int64_t q = 3; q * q <= p; q += 2)
        if (p % q == 0) return false;
    return true;
}

PrimeClass classify_prime(const QuadRing& ring, std::int64_t p) {
    if (!is_prime(p)) throw NotPrime("p = " + std::to_string(p) + " is not prime");
    Quadratic f = splitting_poly(ring);
    int roots = 0;
    for (std::int64_t x = 0; x < p; ++x)
        if (f.eval_mod(x, p) == 0) ++roots;
    switch (roots) {
        case 0:
            return PrimeClass::Inert;
        case 1:
            return PrimeClass::Ramified;
        case 2:
            return PrimeClass::Split;
    }
    throw Error("monic quadratic with more than two roots mod a prime");
}

RingElem elem_make(std::int64_t a, std::int64_t b, std::int64_t modulus) {
    if (modulus < 1) throw InputError("RingElem: modulus must be positive");
    return RingElem{mod_reduce(a, modulus), mod_reduce(b, modulus), modulus};
}

RingElem elem_add(const RingElem& x, const RingElem& y) {
    if (x.modulus != y.modulus) throw ModulusMismatch("elem_add: moduli differ");
    return RingElem{mod_reduce(x.a + y.a, x.modulus), mod_reduce(x.b + y.b, x.modulus), x.modulus};
}

RingElem elem_neg(const RingElem& x) {
    return RingElem{mod_reduce(-x.a, x.modulus), mod_reduce(-x.b, x.modulus), x.modulus};
}

RingElem elem_mul(const QuadRing& ring, const RingElem& x, const RingElem& y) {
    if (x.modulus != y.modulus) throw ModulusMismatch("elem_mul: moduli differ");
    const std::int64_t m = x.modulus;
    // (a + b w)(a' + b' w) with w^2 = t w + n.
    std::int64_t bb = mod_mul(x.b, y.b, m);
    std::int64_t a = mod_reduce(mod_mul(x.a, y.a, m) + mod_mul(mod_reduce(ring.norm_n, m), bb, m), m);
    std::int64_t b = mod_reduce(
        mod_mul(x.a, y.b, m) + mod_mul(x.b, y.a, m) + mod_mul(mod_reduce(ring.trace_t, m), bb, m), m);
    return RingElem{a, b, m};
}

}  // namespace heiszeta
