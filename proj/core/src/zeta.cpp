#include "heiszeta/zeta.hpp"

#include <algorithm>

namespace heiszeta {

// ---------------------------------------------------------------------------
// ZPoly
// ---------------------------------------------------------------------------

void ZPoly::trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

mpz_class ZPoly::eval(const mpz_class& x) const {
    mpz_class v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * x + *it;
    return v;
}

namespace {

ZPoly zp_from(const std::vector<long>& coeffs) {
    ZPoly p;
    for (long v : coeffs) p.c.emplace_back(v);
    p.trim();
    return p;
}

ZPoly zp_one() { return zp_from({1}); }

ZPoly zp_neg(const ZPoly& a) {
    ZPoly r = a;
    for (auto& v : r.c) v = -v;
    return r;
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (std::size_t i = 0; i < r.c.size(); ++i) {
        if (i < a.c.size()) r.c[i] += a.c[i];
        if (i < b.c.size()) r.c[i] += b.c[i];
    }
    r.trim();
    return r;
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) { return zp_add(a, zp_neg(b)); }

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly{};
    ZPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

ZPoly zp_scale(const ZPoly& a, const mpz_class& s) {
    ZPoly r = a;
    for (auto& v : r.c) v *= s;
    r.trim();
    return r;
}

mpz_class zp_content(const ZPoly& a) {
    mpz_class g = 0;
    for (const auto& v : a.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;  // nonnegative
}

ZPoly zp_divexact_scalar(const ZPoly& a, const mpz_class& s) {
    ZPoly r = a;
    for (auto& v : r.c) {
        if (v % s != 0) throw Error("ZPoly: inexact scalar division");
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
    }
    return r;
}

ZPoly zp_primitive(const ZPoly& a) {
    if (a.is_zero()) return a;
    mpz_class cont = zp_content(a);
    ZPoly r = zp_divexact_scalar(a, cont);
    if (r.c.back() < 0) r = zp_neg(r);
    return r;
}

ZPoly zp_shift(const ZPoly& a, int k) {
    if (a.is_zero()) return a;
    ZPoly r;
    r.c.assign(a.c.size() + static_cast<std::size_t>(k), mpz_class(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i + static_cast<std::size_t>(k)] = a.c[i];
    return r;
}

// lc(b)^(deg a - deg b + 1) * a mod b, by repeated leading-term elimination.
ZPoly zp_pseudo_rem(ZPoly a, const ZPoly& b) {
    const mpz_class& lcb = b.c.back();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        int shift = a.degree() - b.degree();
        ZPoly scaled = zp_scale(a, lcb);
        ZPoly sub = zp_shift(zp_scale(b, a.c.back()), shift);
        a = zp_sub(scaled, sub);
    }
    return a;
}

ZPoly zp_gcd(ZPoly a, ZPoly b) {
    if (a.is_zero()) return zp_primitive(b).is_zero() ? ZPoly{} : zp_scale(zp_primitive(b), zp_content(b));
    if (b.is_zero()) return zp_scale(zp_primitive(a), zp_content(a));
    mpz_class ca = zp_content(a), cb = zp_content(b), cont;
    mpz_gcd(cont.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = zp_divexact_scalar(a, ca);
    b = zp_divexact_scalar(b, cb);
    while (!b.is_zero()) {
        ZPoly r = zp_pseudo_rem(a, b);
        a = b;
        b = zp_primitive(r);
    }
    ZPoly g = zp_primitive(a);
    return zp_scale(g, cont);
}

// Exact division a / b in Z[x]; throws if the division is not exact.
ZPoly zp_divexact(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw Error("ZPoly: division by zero");
    if (a.is_zero()) return ZPoly{};
    ZPoly rem = a;
    ZPoly q;
    q.c.assign(static_cast<std::size_t>(a.degree() - b.degree() + 1), mpz_class(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        if (rem.c.back() % b.c.back() != 0) throw Error("ZPoly: inexact division");
        mpz_class qc;
        mpz_divexact(qc.get_mpz_t(), rem.c.back().get_mpz_t(), b.c.back().get_mpz_t());
        int shift = rem.degree() - b.degree();
        q.c[static_cast<std::size_t>(shift)] = qc;
        ZPoly sub = zp_shift(zp_scale(b, qc), shift);
        rem = zp_sub(rem, sub);
    }
    if (!rem.is_zero()) throw Error("ZPoly: inexact division (remainder)");
    q.trim();
    return q;
}

}  // namespace

// ---------------------------------------------------------------------------
// BiPoly
// ---------------------------------------------------------------------------

void BiPoly::trim() {
    for (auto& p : t) p.trim();
    while (!t.empty() && t.back().is_zero()) t.pop_back();
}

bool BiPoly::is_one() const { return t.size() == 1 && t[0] == zp_one(); }

int BiPoly::deg_p() const {
    int d = -1;
    for (const auto& p : t) d = std::max(d, p.degree());
    return d;
}

BiPoly bp_one() {
    BiPoly r;
    r.t.push_back(zp_one());
    return r;
}

BiPoly bp_make(const std::vector<std::vector<long>>& coeffs) {
    BiPoly r;
    for (const auto& row : coeffs) r.t.push_back(zp_from(row));
    r.trim();
    return r;
}

BiPoly bp_add(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    r.t.resize(std::max(a.t.size(), b.t.size()));
    for (std::size_t k = 0; k < r.t.size(); ++k) {
        if (k < a.t.size()) r.t[k] = zp_add(r.t[k], a.t[k]);
        if (k < b.t.size()) r.t[k] = zp_add(r.t[k], b.t[k]);
    }
    r.trim();
    return r;
}

BiPoly bp_sub(const BiPoly& a, const BiPoly& b) {
    BiPoly nb = b;
    for (auto& p : nb.t) p = zp_neg(p);
    return bp_add(a, nb);
}

BiPoly bp_mul(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly{};
    BiPoly r;
    r.t.resize(a.t.size() + b.t.size() - 1);
    for (std::size_t i = 0; i < a.t.size(); ++i)
        for (std::size_t j = 0; j < b.t.size(); ++j)
            r.t[i + j] = zp_add(r.t[i + j], zp_mul(a.t[i], b.t[j]));
    r.trim();
    return r;
}

namespace {

BiPoly bp_scale_zp(const BiPoly& a, const ZPoly& s) {
    BiPoly r;
    r.t.reserve(a.t.size());
    for (const auto& p : a.t) r.t.push_back(zp_mul(p, s));
    r.trim();
    return r;
}

ZPoly bp_content_t(const BiPoly& a) {
    ZPoly g;
    for (const auto& p : a.t) g = zp_gcd(g, p);
    return g;
}

BiPoly bp_divexact_zp(const BiPoly& a, const ZPoly& s) {
    BiPoly r;
    r.t.reserve(a.t.size());
    for (const auto& p : a.t) r.t.push_back(p.is_zero() ? p : zp_divexact(p, s));
    r.trim();
    return r;
}

BiPoly bp_primitive_t(const BiPoly& a) {
    if (a.is_zero()) return a;
    return bp_divexact_zp(a, bp_content_t(a));
}

BiPoly bp_shift_t(const BiPoly& a, int k) {
    if (a.is_zero()) return a;
    BiPoly r;
    r.t.resize(a.t.size() + static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < a.t.size(); ++i) r.t[i + static_cast<std::size_t>(k)] = a.t[i];
    return r;
}

BiPoly bp_pseudo_rem_t(BiPoly a, const BiPoly& b) {
    const ZPoly lcb = b.t.back();
    while (!a.is_zero() && a.deg_t() >= b.deg_t()) {
        int shift = a.deg_t() - b.deg_t();
        BiPoly scaled = bp_scale_zp(a, lcb);
        BiPoly sub = bp_shift_t(bp_scale_zp(b, a.t.back()), shift);
        a = bp_sub(scaled, sub);
    }
    return a;
}

// Exact division in (Z[P])[T]; valid when b | a.
BiPoly bp_divexact(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw Error("BiPoly: division by zero");
    if (a.is_zero()) return BiPoly{};
    BiPoly rem = a;
    BiPoly q;
    q.t.resize(static_cast<std::size_t>(a.deg_t() - b.deg_t() + 1));
    while (!rem.is_zero() && rem.deg_t() >= b.deg_t()) {
        ZPoly qc = zp_divexact(rem.t.back(), b.t.back());
        int shift = rem.deg_t() - b.deg_t();
        q.t[static_cast<std::size_t>(shift)] = qc;
        BiPoly sub = bp_shift_t(bp_scale_zp(b, qc), shift);
        rem = bp_sub(rem, sub);
    }
    if (!rem.is_zero()) throw Error("BiPoly: inexact division");
    q.trim();
    return q;
}

}  // namespace

BiPoly bp_gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() && b.is_zero()) return BiPoly{};
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    ZPoly ca = bp_content_t(a), cb = bp_content_t(b);
    ZPoly cont = zp_gcd(ca, cb);
    BiPoly x = bp_divexact_zp(a, ca);
    BiPoly y = bp_divexact_zp(b, cb);
    if (x.deg_t() < y.deg_t()) std::swap(x, y);
    while (!y.is_zero() && y.deg_t() > 0) {
        BiPoly r = bp_pseudo_rem_t(x, y);
        x = y;
        y = bp_primitive_t(r);
    }
    BiPoly g;
    if (y.is_zero())
        g = bp_primitive_t(x);
    else
        g = bp_one();  // a T-constant shares no T-content with a T-primitive poly
    return bp_scale_zp(g, cont);
}

// ---------------------------------------------------------------------------
// BiRational
// ---------------------------------------------------------------------------

BiRational::BiRational(BiPoly n, BiPoly d) : num(std::move(n)), den(std::move(d)) {
    num.trim();
    den.trim();
    if (den.is_zero()) throw InputError("BiRational: zero denominator");
    if (num.is_zero()) {
        den = bp_one();
        return;
    }
    BiPoly g = bp_gcd(num, den);
    num = bp_divexact(num, g);
    den = bp_divexact(den, g);
    // Sign convention: lexicographically-first denominator coefficient > 0.
    for (const auto& p : den.t) {
        for (const auto& v : p.c) {
            if (v == 0) continue;
            if (v < 0) {
                for (auto& q : num.t) q = zp_neg(q);
                for (auto& q : den.t) q = zp_neg(q);
            }
            return;
        }
    }
}

BiRational rat_mul(const BiRational& a, const BiRational& b) {
    return BiRational(bp_mul(a.num, b.num), bp_mul(a.den, b.den));
}

BiRational rat_div(const BiRational& a, const BiRational& b) {
    if (b.num.is_zero()) throw InputError("rat_div: division by zero");
    return BiRational(bp_mul(a.num, b.den), bp_mul(a.den, b.num));
}

std::string to_string(const BiRational& f) {
    auto poly_str = [](const BiPoly& poly) -> std::pair<std::string, int> {
        std::string out;
        int terms = 0;
        for (int k = 0; k <= poly.deg_t(); ++k) {
            const ZPoly& zp = poly.t[static_cast<std::size_t>(k)];
            for (int i = 0; i <= zp.degree(); ++i) {
                const mpz_class& v = zp.c[static_cast<std::size_t>(i)];
                if (v == 0) continue;
                mpz_class av = abs(v);
                std::string term;
                if (av != 1 || (i == 0 && k == 0)) term = av.get_str();
                if (i > 0) {
                    if (!term.empty()) term += "*";
                    term += i == 1 ? "P" : "P^" + std::to_string(i);
                }
                if (k > 0) {
                    if (!term.empty()) term += "*";
                    term += k == 1 ? "T" : "T^" + std::to_string(k);
                }
                if (terms == 0)
                    out += (v < 0 ? "-" : "") + term;
                else
                    out += (v < 0 ? " - " : " + ") + term;
                ++terms;
            }
        }
        if (terms == 0) return {"0", 1};
        return {out, terms};
    };

    auto [num_str, num_terms] = poly_str(f.num);
    if (f.den.is_one()) return num_str;
    auto [den_str, den_terms] = poly_str(f.den);
    std::string lhs = num_terms > 1 ? "(" + num_str + ")" : num_str;
    std::string rhs = den_terms > 1 ? "(" + den_str + ")" : den_str;
    return lhs + "/" + rhs;
}

// ---------------------------------------------------------------------------
// Local factors and the functional equation
// ---------------------------------------------------------------------------

BiRational local_factor(PrimeClass cls) {
    BiPoly one_minus_t = bp_make({{1}, {-1}});
    BiPoly one_minus_pt = bp_make({{1}, {0, -1}});
    switch (cls) {
        case PrimeClass::Inert:
            return BiRational(bp_make({{1}, {}, {-1}}), bp_make({{1}, {}, {0, 0, -1}}));
        case PrimeClass::Split:
            return BiRational(bp_mul(one_minus_t, one_minus_t), bp_mul(one_minus_pt, one_minus_pt));
        case PrimeClass::Ramified:
            return BiRational(one_minus_t, one_minus_pt);
    }
    throw Error("unreachable prime class");
}

BiRational dedekind_local(PrimeClass cls) {
    BiPoly one_minus_t = bp_make({{1}, {-1}});
    switch (cls) {
        case PrimeClass::Inert:
            return BiRational(bp_one(), bp_make({{1}, {}, {-1}}));
        case PrimeClass::Split:
            return BiRational(bp_one(), bp_mul(one_minus_t, one_minus_t));
        case PrimeClass::Ramified:
            return BiRational(bp_one(), one_minus_t);
    }
    throw Error("unreachable prime class");
}

BiRational shift_s_minus_1(const BiRational& f) {
    // T carries p^-s, so s -> s-1 is T -> P*T.
    auto subst = [](const BiPoly& a) {
        BiPoly r = a;
        for (int k = 0; k <= r.deg_t(); ++k)
            r.t[static_cast<std::size_t>(k)] = zp_shift(r.t[static_cast<std::size_t>(k)], k);
        return r;
    };
    return BiRational(subst(f.num), subst(f.den));
}

bool check_local_identity(PrimeClass cls) {
    BiRational ded = dedekind_local(cls);
    return rat_div(shift_s_minus_1(ded), ded) == local_factor(cls);
}

namespace {

// g(1/P, 1/T) * P^(deg_p g) * T^(deg_t g): reverse the coefficient grid.
BiPoly bp_reverse(const BiPoly& a) {
    int dt = a.deg_t(), dp = a.deg_p();
    BiPoly r;
    r.t.resize(static_cast<std::size_t>(dt + 1));
    for (auto& p : r.t) p.c.assign(static_cast<std::size_t>(dp + 1), mpz_class(0));
    for (int k = 0; k <= dt; ++k) {
        const ZPoly& zp = a.t[static_cast<std::size_t>(k)];
        for (int i = 0; i <= zp.degree(); ++i)
            r.t[static_cast<std::size_t>(dt - k)].c[static_cast<std::size_t>(dp - i)] =
                zp.c[static_cast<std::size_t>(i)];
    }
    r.trim();
    return r;
}

BiPoly bp_monomial(int p_deg, int t_deg) {
    BiPoly r;
    r.t.resize(static_cast<std::size_t>(t_deg + 1));
    r.t.back().c.assign(static_cast<std::size_t>(p_deg + 1), mpz_class(0));
    r.t.back().c.back() = 1;
    return r;
}

}  // namespace

int functional_equation_exponent(const BiRational& f) {
    if (f.num.is_zero()) throw NoCleanFunctionalEquation("zero function");
    int dpn = f.num.deg_p(), dtn = f.num.deg_t();
    int dpd = f.den.deg_p(), dtd = f.den.deg_t();
    BiPoly num = bp_reverse(f.num);
    BiPoly den = bp_reverse(f.den);
    // f(1/P,1/T) = rev(num)/rev(den) * P^(dpd-dpn) * T^(dtd-dtn)
    int dP = dpd - dpn, dT = dtd - dtn;
    if (dP >= 0)
        num = bp_mul(num, bp_monomial(dP, 0));
    else
        den = bp_mul(den, bp_monomial(-dP, 0));
    if (dT >= 0)
        num = bp_mul(num, bp_monomial(0, dT));
    else
        den = bp_mul(den, bp_monomial(0, -dT));

    BiRational ratio = rat_div(BiRational(num, den), f);
    auto monomial_p_degree = [](const BiPoly& a, int* out) -> bool {
        if (a.deg_t() != 0) return false;
        const ZPoly& zp = a.t[0];
        int nonzero = -1;
        for (int i = 0; i <= zp.degree(); ++i) {
            if (zp.c[static_cast<std::size_t>(i)] == 0) continue;
            if (nonzero >= 0) return false;
            if (zp.c[static_cast<std::size_t>(i)] != 1) return false;
            nonzero = i;
        }
        if (nonzero < 0) return false;
        *out = nonzero;
        return true;
    };
    int up = 0, down = 0;
    if (!monomial_p_degree(ratio.num, &up) || !monomial_p_degree(ratio.den, &down))
        throw NoCleanFunctionalEquation("inversion quotient is not a power of P");
    return up - down;
}

int functional_equation_exponent(PrimeClass cls) {
    return functional_equation_exponent(local_factor(cls));
}

// ---------------------------------------------------------------------------
// Series expansion and Dirichlet arithmetic
// ---------------------------------------------------------------------------

std::vector<mpz_class> series_expand(const BiRational& f, std::int64_t p, int N) {
    if (N < 0) throw InputError("series_expand: N must be >= 0");
    mpz_class P(static_cast<long>(p));
    auto coeffs_at = [&](const BiPoly& a) {
        std::vector<mpz_class> v(static_cast<std::size_t>(N + 1), mpz_class(0));
        for (int k = 0; k <= std::min(N, a.deg_t()); ++k)
            v[static_cast<std::size_t>(k)] = a.t[static_cast<std::size_t>(k)].eval(P);
        return v;
    };
    std::vector<mpz_class> num = coeffs_at(f.num);
    std::vector<mpz_class> den = coeffs_at(f.den);
    mpz_class d0 = f.den.is_zero() ? mpz_class(0) : f.den.t[0].eval(P);
    if (d0 != 1 && d0 != -1)
        throw NotPowerSeries("series_expand: denominator constant term is not a unit");
    std::vector<mpz_class> out(static_cast<std::size_t>(N + 1));
    for (int k = 0; k <= N; ++k) {
        mpz_class acc = num[static_cast<std::size_t>(k)];
        for (int j = 1; j <= std::min(k, f.den.deg_t()); ++j)
            acc -= den[static_cast<std::size_t>(j)] * out[static_cast<std::size_t>(k - j)];
        out[static_cast<std::size_t>(k)] = d0 == 1 ? acc : -acc;
    }
    return out;
}

DirichletCoeffs dedekind_coeffs(const QuadRing& ring, std::int64_t N) {
    if (N < 1) throw InputError("dedekind_coeffs: N must be >= 1");
    DirichletCoeffs out;
    out.N = N;
    out.a.assign(static_cast<std::size_t>(N + 1), mpz_class(0));
    out.a[1] = 1;
    for (std::int64_t p = 2; p <= N; ++p) {
        if (!is_prime(p)) continue;
        PrimeClass cls = classify_prime(ring, p);
        // Local coefficient of T^j: inert 1 on even j; split j+1; ramified 1.
        auto local = [&](int j) -> std::int64_t {
            switch (cls) {
                case PrimeClass::Inert:
                    return j % 2 == 0 ? 1 : 0;
                case PrimeClass::Split:
                    return j + 1;
                case PrimeClass::Ramified:
                    return 1;
            }
            return 0;
        };
        std::vector<mpz_class> next(static_cast<std::size_t>(N + 1), mpz_class(0));
        for (std::int64_t n = 1; n <= N; ++n) {
            std::int64_t q = 1;
            for (int j = 0; q <= n; ++j, q *= p) {
                if (n % q == 0) next[static_cast<std::size_t>(n)] +=
                    local(j) * out.a[static_cast<std::size_t>(n / q)];
                if (q > N / p) break;  // next power would overflow the bound
            }
        }
        out.a = std::move(next);
    }
    return out;
}

DirichletCoeffs dirichlet_convolve(const DirichletCoeffs& x, const DirichletCoeffs& y) {
    if (x.N != y.N) throw InputError("dirichlet_convolve: mismatched truncation bounds");
    DirichletCoeffs out;
    out.N = x.N;
    out.a.assign(static_cast<std::size_t>(x.N + 1), mpz_class(0));
    for (std::int64_t d = 1; d <= x.N; ++d) {
        if (x.a[static_cast<std::size_t>(d)] == 0) continue;
        for (std::int64_t m = 1; d * m <= x.N; ++m)
            out.a[static_cast<std::size_t>(d * m)] +=
                x.a[static_cast<std::size_t>(d)] * y.a[static_cast<std::size_t>(m)];
    }
    return out;
}

DirichletCoeffs dirichlet_inverse(const DirichletCoeffs& x) {
    if (x.N < 1 || x.a[1] != 1) throw InputError("dirichlet_inverse: needs a_1 = 1");
    DirichletCoeffs out;
    out.N = x.N;
    out.a.assign(static_cast<std::size_t>(x.N + 1), mpz_class(0));
    out.a[1] = 1;
    for (std::int64_t n = 2; n <= x.N; ++n) {
        mpz_class acc = 0;
        for (std::int64_t d = 1; d * d <= n; ++d) {
            if (n % d != 0) continue;
            std::int64_t e = n / d;
            if (d < n) acc += out.a[static_cast<std::size_t>(d)] * x.a[static_cast<std::size_t>(e)];
            if (e != d && e < n)
                acc += out.a[static_cast<std::size_t>(e)] * x.a[static_cast<std::size_t>(d)];
        }
        out.a[static_cast<std::size_t>(n)] = -acc;
    }
    return out;
}

DirichletCoeffs quotient_series_coeffs(const QuadRing& ring, std::int64_t N) {
    DirichletCoeffs a = dedekind_coeffs(ring, N);
    DirichletCoeffs shifted;  // coefficients of zeta_K(s-1): n * a_n
    shifted.N = N;
    shifted.a.assign(static_cast<std::size_t>(N + 1), mpz_class(0));
    for (std::int64_t n = 1; n <= N; ++n)
        shifted.a[static_cast<std::size_t>(n)] = a.a[static_cast<std::size_t>(n)] * n;
    return dirichlet_convolve(shifted, dirichlet_inverse(a));
}

bool check_global_identity(const QuadRing& ring, std::int64_t N) {
    DirichletCoeffs b = quotient_series_coeffs(ring, N);
    for (std::int64_t n = 1; n <= N; ++n)
        if (b.at(n) != r_coeff(ring, n)) return false;
    return true;
}

}  // namespace heiszeta
