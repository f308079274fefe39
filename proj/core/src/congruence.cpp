#include "heiszeta/congruence.hpp"

#include <algorithm>

namespace heiszeta {

namespace {

void validate(const Congruence& c) {
    if (!is_prime(c.p)) throw NotPrime("congruence modulus base is not prime");
    if (c.k < 0) throw InputError("congruence exponent must be >= 0");
}

}  // namespace

RootSet solve_exhaustive(const Congruence& c) {
    validate(c);
    std::int64_t mod = ipow_checked(c.p, c.k);
    if (mod > 10'000'000) throw TooLarge("solve_exhaustive: p^k exceeds scan guard");
    RootSet out;
    for (std::int64_t x = 0; x < mod; ++x)
        if (c.f.eval_mod(x, mod) == 0) out.push_back(x);
    return out;
}

RootSet solve(const Congruence& c) {
    validate(c);
    if (c.k == 0) return RootSet{0};  // every residue mod 1

    RootSet cur;
    for (std::int64_t x = 0; x < c.p; ++x)
        if (c.f.eval_mod(x, c.p) == 0) cur.push_back(x);

    std::int64_t pj = c.p;
    for (int j = 1; j < c.k; ++j) {
        std::int64_t pj1 = ipow_checked(c.p, j + 1);
        RootSet next;
        for (std::int64_t alpha : cur) {
            std::int64_t deriv = mod_reduce(2 * (alpha % c.p) + c.f.b, c.p);
            if (deriv != 0) {
                // Unique lift: alpha + t*p^j with t = -(f(alpha)/p^j) / f'(alpha) mod p.
                std::int64_t fa = c.f.eval_mod(alpha, pj1);
                std::int64_t t = mod_reduce(-mod_mul(fa / pj, mod_inv(deriv, c.p), c.p), c.p);
                next.push_back(alpha + t * pj);
            } else {
                for (std::int64_t t = 0; t < c.p; ++t) {
                    std::int64_t cand = alpha + t * pj;
                    if (c.f.eval_mod(cand, pj1) == 0) next.push_back(cand);
                }
            }
        }
        cur = std::move(next);
        pj = pj1;
    }
    std::sort(cur.begin(), cur.end());
    return cur;
}

std::int64_t count_exact_valuation(const Quadratic& f, std::int64_t p, int r, int e) {
    if (e < 0 || e > r) throw InputError("count_exact_valuation: need 0 <= e <= r");
    // Over l in [0, p^r): ord_p f(l) >= ee iff l mod p^ee is a root mod p^ee,
    // so N(>= ee) = p^(r-ee) * #roots(p^ee).
    auto n_ge = [&](int ee) -> std::int64_t {
        std::int64_t roots =
            ee == 0 ? 1 : static_cast<std::int64_t>(solve(Congruence{f, p, ee}).size());
        return ipow_checked(p, r - ee) * roots;
    };
    if (e == r) return n_ge(r);
    return n_ge(e) - n_ge(e + 1);
}

}  // namespace heiszeta
