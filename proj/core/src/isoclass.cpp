#include "heiszeta/isoclass.hpp"

#include <algorithm>
#include <tuple>

namespace heiszeta {

std::int64_t euler_phi_prime_power(std::int64_t p, int a) {
    if (a == 0) return 1;
    return ipow_checked(p, a - 1) * (p - 1);
}

std::int64_t closed_form_count(const QuadRing& ring, std::int64_t p, int n) {
    if (n < 0) throw InputError("closed_form_count: n must be >= 0");
    if (n == 0) return 1;
    switch (classify_prime(ring, p)) {
        case PrimeClass::Inert:
            if (n % 2 == 1) return 0;
            return ipow_checked(p, n - 2) * (p + 1) * (p - 1);
        case PrimeClass::Split: {
            std::int64_t bracket = static_cast<std::int64_t>(n) * (p - 1) + p + 1;
            if (n == 1) return (p - 1) * bracket / p;  // bracket = 2p here
            return ipow_checked(p, n - 2) * (p - 1) * bracket;
        }
        case PrimeClass::Ramified:
            return euler_phi_prime_power(p, n);
    }
    throw Error("unreachable prime class");
}

namespace {

IsoclassLabel trivial_label(std::int64_t p) {
    IsoclassLabel lab;
    lab.p = p;
    return lab;
}

// Valid Case1 l values in [0, p^r) for the stratum (r, m): ord_p f(l) = r-m
// exactly when m > 0, and >= r when m = 0. Enumerated from the root structure
// so the cost is proportional to the output.
std::vector<std::int64_t> case1_l_values(const Quadratic& f, std::int64_t p, int r, int m) {
    if (m == 0) return solve(Congruence{f, p, r});
    int e = r - m;
    std::int64_t pe = ipow_checked(p, e);
    std::int64_t pe1 = pe * p;  // e < r, so p^(e+1) <= p^r
    std::int64_t lifts = ipow_checked(p, r - e);
    std::vector<std::int64_t> base = e == 0 ? std::vector<std::int64_t>{0} : solve(Congruence{f, p, e});
    std::vector<std::int64_t> out;
    for (std::int64_t rho : base) {
        for (std::int64_t t = 0; t < lifts; ++t) {
            std::int64_t l = rho + t * pe;
            if (f.eval_mod(l, pe1) != 0) out.push_back(l);  // excludes ord > e
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

IsoclassCensus enumerate(const QuadRing& ring, std::int64_t p, int n, std::int64_t materialize_cap) {
    if (!is_prime(p)) throw NotPrime("enumerate: p is not prime");
    if (n < 0) throw InputError("enumerate: n must be >= 0");

    IsoclassCensus census;
    census.p = p;
    census.n = n;
    if (n == 0) {
        census.count = 1;
        census.materialized = true;
        census.labels.push_back(trivial_label(p));
        return census;
    }

    Quadratic f = splitting_poly(ring);

    std::int64_t count = 0;
    for (int m = 0; m <= n / 2; ++m) {
        int r = n - m;
        std::int64_t phi = euler_phi_prime_power(p, r);
        count += phi * count_exact_valuation(f, p, r, r - m);
        if (r == m) count += phi * ipow_checked(p, r - 1);
    }
    census.count = count;
    if (count > materialize_cap) return census;

    census.materialized = true;
    census.labels.reserve(static_cast<std::size_t>(count));
    for (int m = 0; m <= n / 2; ++m) {
        int r = n - m;
        std::int64_t pr = ipow_checked(p, r);
        std::vector<std::int64_t> ls = case1_l_values(f, p, r, m);
        for (std::int64_t u = 1; u < pr; ++u) {
            if (u % p == 0) continue;
            for (std::int64_t l : ls) {
                IsoclassLabel lab;
                lab.p = p;
                lab.n = n;
                lab.r = r;
                lab.m = m;
                lab.kase = IsoCase::Case1;
                lab.u = u;
                lab.l = l;
                lab.lambda_exp = u;
                lab.mu_exp = mod_mul(u, l, pr);
                census.labels.push_back(lab);
            }
            if (r == m) {
                std::int64_t non_units = pr / p;
                for (std::int64_t t = 0; t < non_units; ++t) {
                    std::int64_t l = t * p;
                    IsoclassLabel lab;
                    lab.p = p;
                    lab.n = n;
                    lab.r = r;
                    lab.m = m;
                    lab.kase = IsoCase::Case2;
                    lab.u = u;
                    lab.l = l;
                    lab.lambda_exp = mod_mul(u, l, pr);
                    lab.mu_exp = u;
                    census.labels.push_back(lab);
                }
            }
        }
    }
    std::sort(census.labels.begin(), census.labels.end(),
              [](const IsoclassLabel& a, const IsoclassLabel& b) {
                  return std::tuple(a.r, static_cast<int>(a.kase), a.u, a.l) <
                         std::tuple(b.r, static_cast<int>(b.kase), b.u, b.l);
              });
    if (static_cast<std::int64_t>(census.labels.size()) != count)
        throw Error("enumerate: materialized label count disagrees with valuation count");
    return census;
}

std::int64_t r_coeff(const QuadRing& ring, std::int64_t n) {
    if (n < 1) throw InputError("r_coeff: n must be >= 1");
    std::int64_t result = 1;
    std::int64_t rest = n;
    for (std::int64_t p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) continue;
        int a = 0;
        while (rest % p == 0) {
            rest /= p;
            ++a;
        }
        result *= closed_form_count(ring, p, a);
        if (result == 0) return 0;
    }
    if (rest > 1) result *= closed_form_count(ring, rest, 1);
    return result;
}

bool check_label(const QuadRing& ring, const IsoclassLabel& lab) {
    if (!is_prime(lab.p)) return false;
    if (lab.n < 0 || lab.r < 0 || lab.m < 0) return false;
    if (lab.r + lab.m != lab.n || lab.r < lab.m) return false;
    if (lab.n == 0)
        return lab.kase == IsoCase::Case1 && lab.u == 0 && lab.l == 0 && lab.lambda_exp == 0 &&
               lab.mu_exp == 0;

    std::int64_t pr = ipow_checked(lab.p, lab.r);
    if (lab.u < 0 || lab.u >= pr || lab.l < 0 || lab.l >= pr) return false;
    if (lab.u % lab.p == 0) return false;  // both cases carry a unit u
    if (lab.lambda_exp % lab.p == 0 && lab.mu_exp % lab.p == 0)
        return false;  // at least one scalar must be primitive

    Quadratic f = splitting_poly(ring);
    if (lab.kase == IsoCase::Case1) {
        if (lab.lambda_exp != lab.u) return false;
        if (lab.mu_exp != mod_mul(lab.u, lab.l, pr)) return false;
        std::int64_t rm = f.eval_mod(lab.l, pr);
        if (lab.m == 0) {
            if (rm != 0) return false;
        } else {
            if (rm == 0) return false;
            int v = 0;
            while (rm % lab.p == 0) {
                rm /= lab.p;
                ++v;
            }
            if (v != lab.r - lab.m) return false;
        }
    } else {
        if (lab.r != lab.m) return false;
        if (lab.mu_exp != lab.u) return false;
        if (lab.l % lab.p != 0) return false;
        if (lab.lambda_exp != mod_mul(lab.u, lab.l, pr)) return false;
        if (lab.lambda_exp % lab.p != 0) return false;
    }
    return true;
}

}  // namespace heiszeta
