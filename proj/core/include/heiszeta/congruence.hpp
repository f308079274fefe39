#pragma once

#include "heiszeta/quad_ring.hpp"

namespace heiszeta {

// The congruence f(x) = 0 mod p^k for a monic quadratic f.
struct Congruence {
    Quadratic f;
    std::int64_t p = 2;
    int k = 1;
};

// Sorted residues in [0, p^k), no duplicates.
using RootSet = std::vector<std::int64_t>;

// Reference oracle: direct scan of all residues. Guarded at p^k <= 10^7.
RootSet solve_exhaustive(const Congruence& c);

// Hensel lifting from the roots mod p; falls back to level-by-level
// exhaustive lifting when the derivative vanishes at a root mod p.
RootSet solve(const Congruence& c);

// |{0 <= l < p^r : ord_p f(l) = e}| for e < r, and |{l : ord_p f(l) >= r}|
// for e = r. f(l) = 0 counts as ord infinity: it satisfies ">= r" but never
// "= e" for finite e.
std::int64_t count_exact_valuation(const Quadratic& f, std::int64_t p, int r, int e);

}  // namespace heiszeta
