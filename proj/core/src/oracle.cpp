#include "heiszeta/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

namespace heiszeta {

// ---------------------------------------------------------------------------
// Group arithmetic on packed codes
// ---------------------------------------------------------------------------

std::int64_t FiniteHeisenberg::encode(std::int64_t a1, std::int64_t a2, std::int64_t b1,
                                      std::int64_t b2, std::int64_t c1, std::int64_t c2) const {
    return ((((a1 * q + a2) * q + b1) * q + b2) * q + c1) * q + c2;
}

std::array<std::int64_t, 6> FiniteHeisenberg::decode(std::int64_t code) const {
    std::array<std::int64_t, 6> d;
    for (int i = 5; i >= 0; --i) {
        d[static_cast<std::size_t>(i)] = code % q;
        code /= q;
    }
    return d;
}

namespace {

struct Unpacked {
    std::int64_t a1, a2, b1, b2, c1, c2;
};

inline Unpacked unpack(std::int64_t code, std::int64_t q) {
    Unpacked u;
    u.c2 = code % q;
    code /= q;
    u.c1 = code % q;
    code /= q;
    u.b2 = code % q;
    code /= q;
    u.b1 = code % q;
    code /= q;
    u.a2 = code % q;
    code /= q;
    u.a1 = code;
    return u;
}

}  // namespace

std::int64_t FiniteHeisenberg::mul(std::int64_t x, std::int64_t y) const {
    Unpacked u = unpack(x, q), v = unpack(y, q);
    std::int64_t t = mod_reduce(ring.trace_t, q);
    std::int64_t n = mod_reduce(ring.norm_n, q);
    // alpha * beta' with omega^2 = t*omega + n
    std::int64_t bb = (u.a2 * v.b2) % q;
    std::int64_t prod1 = (u.a1 * v.b1 + n * bb) % q;
    std::int64_t prod2 = (u.a1 * v.b2 + u.a2 * v.b1 + t * bb) % q;
    return encode((u.a1 + v.a1) % q, (u.a2 + v.a2) % q, (u.b1 + v.b1) % q, (u.b2 + v.b2) % q,
                  mod_reduce(u.c1 + v.c1 + prod1, q), mod_reduce(u.c2 + v.c2 + prod2, q));
}

std::int64_t FiniteHeisenberg::inv(std::int64_t x) const {
    Unpacked u = unpack(x, q);
    std::int64_t t = mod_reduce(ring.trace_t, q);
    std::int64_t n = mod_reduce(ring.norm_n, q);
    std::int64_t bb = (u.a2 * u.b2) % q;
    std::int64_t prod1 = (u.a1 * u.b1 + n * bb) % q;
    std::int64_t prod2 = (u.a1 * u.b2 + u.a2 * u.b1 + t * bb) % q;
    return encode(mod_reduce(-u.a1, q), mod_reduce(-u.a2, q), mod_reduce(-u.b1, q),
                  mod_reduce(-u.b2, q), mod_reduce(-u.c1 + prod1, q),
                  mod_reduce(-u.c2 + prod2, q));
}

std::int64_t FiniteHeisenberg::element_order(std::int64_t x) const {
    std::int64_t h = x, n = 1;
    while (h != 0) {
        h = mul(h, x);
        ++n;
    }
    return n;
}

std::array<std::int64_t, 4> FiniteHeisenberg::generators() const {
    return {encode(1, 0, 0, 0, 0, 0), encode(0, 1, 0, 0, 0, 0), encode(0, 0, 1, 0, 0, 0),
            encode(0, 0, 0, 1, 0, 0)};
}

FiniteHeisenberg quotient_group(const QuadRing& ring, std::int64_t p, int k,
                                std::int64_t order_guard) {
    if (!is_prime(p)) throw NotPrime("quotient_group: p is not prime");
    if (k < 1) throw InputError("quotient_group: k must be >= 1");
    FiniteHeisenberg G;
    G.ring = ring;
    G.p = p;
    G.k = k;
    G.q = ipow_checked(p, k);
    G.order = ipow_checked(p, 6 * k);
    if (G.order > order_guard) throw TooLarge("quotient_group: p^(6k) exceeds order guard");
    return G;
}

// ---------------------------------------------------------------------------
// Conjugacy classes
// ---------------------------------------------------------------------------

ConjugacyClasses conjugacy_classes(const FiniteHeisenberg& G) {
    ConjugacyClasses cc;
    cc.class_of.assign(static_cast<std::size_t>(G.order), -1);
    auto gens = G.generators();
    std::array<std::int64_t, 4> gen_inv;
    for (std::size_t i = 0; i < 4; ++i) gen_inv[i] = G.inv(gens[i]);

    std::deque<std::int64_t> queue;
    for (std::int64_t code = 0; code < G.order; ++code) {
        if (cc.class_of[static_cast<std::size_t>(code)] >= 0) continue;
        const auto idx = static_cast<std::int32_t>(cc.reps.size());
        cc.reps.push_back(code);
        cc.class_of[static_cast<std::size_t>(code)] = idx;
        std::int64_t size = 1;
        queue.clear();
        queue.push_back(code);
        while (!queue.empty()) {
            std::int64_t g = queue.front();
            queue.pop_front();
            for (std::size_t s = 0; s < 4; ++s) {
                std::int64_t h = G.mul(G.mul(gen_inv[s], g), gens[s]);
                if (cc.class_of[static_cast<std::size_t>(h)] < 0) {
                    cc.class_of[static_cast<std::size_t>(h)] = idx;
                    ++size;
                    queue.push_back(h);
                }
            }
        }
        cc.sizes.push_back(size);
    }

    const int C = cc.count();
    cc.inverse_class.resize(static_cast<std::size_t>(C));
    for (int c = 0; c < C; ++c)
        cc.inverse_class[static_cast<std::size_t>(c)] =
            cc.class_of[static_cast<std::size_t>(G.inv(cc.reps[static_cast<std::size_t>(c)]))];
    cc.identity_class = cc.class_of[0];

    // CSR member lists.
    cc.member_off.assign(static_cast<std::size_t>(C + 1), 0);
    for (std::int64_t code = 0; code < G.order; ++code)
        ++cc.member_off[static_cast<std::size_t>(cc.class_of[static_cast<std::size_t>(code)] + 1)];
    for (int c = 0; c < C; ++c)
        cc.member_off[static_cast<std::size_t>(c + 1)] += cc.member_off[static_cast<std::size_t>(c)];
    cc.member_flat.resize(static_cast<std::size_t>(G.order));
    std::vector<std::uint32_t> cursor(cc.member_off.begin(), cc.member_off.end() - 1);
    for (std::int64_t code = 0; code < G.order; ++code) {
        auto c = static_cast<std::size_t>(cc.class_of[static_cast<std::size_t>(code)]);
        cc.member_flat[cursor[c]++] = static_cast<std::uint32_t>(code);
    }
    return cc;
}

// ---------------------------------------------------------------------------
// F_ell arithmetic and small linear algebra
// ---------------------------------------------------------------------------

namespace {

using u64 = std::uint64_t;

struct Fp {
    u64 ell;
    u64 add(u64 a, u64 b) const { return (a + b) % ell; }
    u64 sub(u64 a, u64 b) const { return (a + ell - b) % ell; }
    u64 mul(u64 a, u64 b) const { return a * b % ell; }
    u64 pow(u64 b, u64 e) const {
        u64 r = 1 % ell;
        b %= ell;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a) const { return pow(a, ell - 2); }
};

using Row = std::vector<u64>;
using Mat = std::vector<Row>;

// Characteristic polynomial mod ell via Hessenberg reduction (monic,
// ascending coefficients).
Row charpoly_mod(Mat H, const Fp& F) {
    const int n = static_cast<int>(H.size());
    for (int c = 0; c + 2 < n; ++c) {
        int piv = -1;
        for (int r = c + 1; r < n; ++r)
            if (H[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != c + 1) {
            std::swap(H[static_cast<std::size_t>(piv)], H[static_cast<std::size_t>(c + 1)]);
            for (int r = 0; r < n; ++r)
                std::swap(H[static_cast<std::size_t>(r)][static_cast<std::size_t>(piv)],
                          H[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)]);
        }
        u64 inv = F.inv(H[static_cast<std::size_t>(c + 1)][static_cast<std::size_t>(c)]);
        for (int r = c + 2; r < n; ++r) {
            u64 f = F.mul(H[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], inv);
            if (f == 0) continue;
            for (int cc = 0; cc < n; ++cc)
                H[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] =
                    F.sub(H[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)],
                          F.mul(f, H[static_cast<std::size_t>(c + 1)][static_cast<std::size_t>(cc)]));
            for (int rr = 0; rr < n; ++rr)
                H[static_cast<std::size_t>(rr)][static_cast<std::size_t>(c + 1)] =
                    F.add(H[static_cast<std::size_t>(rr)][static_cast<std::size_t>(c + 1)],
                          F.mul(f, H[static_cast<std::size_t>(rr)][static_cast<std::size_t>(r)]));
        }
    }
    std::vector<Row> p(static_cast<std::size_t>(n + 1));
    p[0] = {1};
    for (int i = 1; i <= n; ++i) {
        Row pi(static_cast<std::size_t>(i + 1), 0);
        const Row& prev = p[static_cast<std::size_t>(i - 1)];
        u64 hii = H[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(i - 1)];
        for (std::size_t t = 0; t < prev.size(); ++t) {
            pi[t + 1] = F.add(pi[t + 1], prev[t]);
            pi[t] = F.sub(pi[t], F.mul(hii, prev[t]));
        }
        u64 prod = 1;
        for (int k = i - 1; k >= 1; --k) {
            prod = F.mul(prod, H[static_cast<std::size_t>(k)][static_cast<std::size_t>(k - 1)]);
            u64 coef = F.mul(H[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(i - 1)], prod);
            if (coef == 0) continue;
            const Row& pk = p[static_cast<std::size_t>(k - 1)];
            for (std::size_t t = 0; t < pk.size(); ++t) pi[t] = F.sub(pi[t], F.mul(coef, pk[t]));
        }
        p[static_cast<std::size_t>(i)] = std::move(pi);
    }
    return p[static_cast<std::size_t>(n)];
}

// Kernel basis of A (n x n), deterministic RREF.
std::vector<Row> kernel_mod(Mat A, const Fp& F) {
    const int n = static_cast<int>(A.size());
    std::vector<int> pivot_row_of_col(static_cast<std::size_t>(n), -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (A[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(A[static_cast<std::size_t>(piv)], A[static_cast<std::size_t>(rank)]);
        u64 inv = F.inv(A[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)]);
        for (int cc = 0; cc < n; ++cc)
            A[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)] =
                F.mul(A[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)], inv);
        for (int r = 0; r < n; ++r) {
            if (r == rank) continue;
            u64 f = A[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int cc = 0; cc < n; ++cc)
                A[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] =
                    F.sub(A[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)],
                          F.mul(f, A[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)]));
        }
        pivot_row_of_col[static_cast<std::size_t>(col)] = rank;
        ++rank;
    }
    std::vector<Row> basis;
    for (int col = 0; col < n; ++col) {
        if (pivot_row_of_col[static_cast<std::size_t>(col)] >= 0) continue;
        Row v(static_cast<std::size_t>(n), 0);
        v[static_cast<std::size_t>(col)] = 1;
        for (int c2 = 0; c2 < n; ++c2) {
            int pr = pivot_row_of_col[static_cast<std::size_t>(c2)];
            if (pr >= 0)
                v[static_cast<std::size_t>(c2)] =
                    F.sub(0, A[static_cast<std::size_t>(pr)][static_cast<std::size_t>(col)]);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Subspace of a block, basis rows kept in RREF with recorded pivot columns.
struct Subspace {
    std::vector<Row> basis;
    std::vector<int> pivots;
};

Subspace echelonize(std::vector<Row> rows, const Fp& F) {
    const int n = rows.empty() ? 0 : static_cast<int>(rows[0].size());
    Subspace s;
    int rank = 0;
    for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[static_cast<std::size_t>(piv)], rows[static_cast<std::size_t>(rank)]);
        u64 inv = F.inv(rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(col)]);
        for (int cc = 0; cc < n; ++cc)
            rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)] =
                F.mul(rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)], inv);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank) continue;
            u64 f = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int cc = 0; cc < n; ++cc)
                rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] =
                    F.sub(rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)],
                          F.mul(f, rows[static_cast<std::size_t>(rank)][static_cast<std::size_t>(cc)]));
        }
        s.pivots.push_back(col);
        ++rank;
    }
    rows.resize(static_cast<std::size_t>(rank));
    s.basis = std::move(rows);
    return s;
}

std::int64_t isqrt64(std::int64_t v) {
    std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

}  // namespace

// ---------------------------------------------------------------------------
// Character table (Burnside-Dixon with central pre-splitting)
// ---------------------------------------------------------------------------

std::int64_t CharacterTable::degree(std::int64_t chi) const {
    if (chi < linear_count) return 1;
    return nonlinear_degrees[static_cast<std::size_t>(chi - linear_count)];
}

std::int64_t CharacterTable::value(std::int64_t chi, std::int64_t cls) const {
    Fp F{static_cast<u64>(ell)};
    if (chi < linear_count) {
        std::int64_t t4 = chi % q, t3 = (chi / q) % q, t2 = (chi / (q * q)) % q,
                     t1 = chi / (q * q * q);
        const auto& co = coords[static_cast<std::size_t>(cls)];
        std::int64_t e = mod_reduce(t1 * co[0] + t2 * co[1] + t3 * co[2] + t4 * co[3], q);
        return static_cast<std::int64_t>(F.pow(static_cast<u64>(zeta_q), static_cast<u64>(e)));
    }
    return nonlinear_rows[static_cast<std::size_t>(chi - linear_count)][static_cast<std::size_t>(cls)];
}

CharacterTable character_table(const FiniteHeisenberg& G, std::int64_t class_guard) {
    CharacterTable T;
    T.group_order = G.order;
    T.q = G.q;
    T.classes = conjugacy_classes(G);
    const int C = T.classes.count();
    if (C > class_guard) throw ClassCountTooLarge("character_table: class count exceeds guard");

    // Exponent and the Dixon field.
    std::int64_t E = 1;
    for (std::int64_t rep : T.classes.reps) E = std::lcm(E, G.element_order(rep));
    T.exponent = E;
    {
        std::int64_t lo = 2 * isqrt64(G.order) + 1;
        std::int64_t cand = ((lo - 2) / E + 1) * E + 1;
        if (cand < E + 1) cand = E + 1;
        int tries = 0;
        while (!is_prime(cand) || cand * cand <= 4 * G.order) {
            cand += E;
            if (++tries > 2'000'000) throw NoSuitableFieldChar("no prime found for Dixon field");
        }
        T.ell = cand;
    }
    Fp F{static_cast<u64>(T.ell)};

    // Generator of F_ell^* and the needed roots of unity.
    u64 gen = 0;
    {
        std::vector<std::int64_t> prime_factors;
        std::int64_t m = T.ell - 1;
        for (std::int64_t f = 2; f * f <= m; ++f) {
            if (m % f) continue;
            prime_factors.push_back(f);
            while (m % f == 0) m /= f;
        }
        if (m > 1) prime_factors.push_back(m);
        for (u64 g = 2; g < static_cast<u64>(T.ell); ++g) {
            bool ok = true;
            for (std::int64_t f : prime_factors)
                if (F.pow(g, static_cast<u64>((T.ell - 1) / f)) == 1) {
                    ok = false;
                    break;
                }
            if (ok) {
                gen = g;
                break;
            }
        }
    }
    u64 zeta_E = F.pow(gen, static_cast<u64>((T.ell - 1) / E));
    T.zeta_q = static_cast<std::int64_t>(F.pow(zeta_E, static_cast<u64>(E / G.q)));
    std::vector<u64> zq_pow(static_cast<std::size_t>(G.q));
    for (std::int64_t s = 0; s < G.q; ++s)
        zq_pow[static_cast<std::size_t>(s)] = F.pow(static_cast<u64>(T.zeta_q), static_cast<u64>(s));

    // Centre (size-1 classes) and the derived subgroup by commutator closure.
    std::vector<std::int64_t> central;
    for (int c = 0; c < C; ++c)
        if (T.classes.sizes[static_cast<std::size_t>(c)] == 1)
            central.push_back(T.classes.reps[static_cast<std::size_t>(c)]);
    std::sort(central.begin(), central.end());
    {
        auto gens = G.generators();
        std::unordered_set<std::int64_t> derived;
        std::deque<std::int64_t> queue;
        auto push = [&](std::int64_t g) {
            if (derived.insert(g).second) queue.push_back(g);
        };
        push(0);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j)
                push(G.mul(G.mul(gens[i], gens[j]), G.inv(G.mul(gens[j], gens[i]))));
        while (!queue.empty()) {
            std::int64_t g = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) {
                    std::int64_t comm =
                        G.mul(G.mul(gens[i], gens[j]), G.inv(G.mul(gens[j], gens[i])));
                    push(G.mul(g, comm));
                }
        }
        std::vector<std::int64_t> derived_sorted(derived.begin(), derived.end());
        std::sort(derived_sorted.begin(), derived_sorted.end());
        if (derived_sorted != central)
            throw Error("character_table: derived subgroup differs from centre");
        // With G' = {(0,0,*)} the central codes are exactly 0..q^2-1 and the
        // abelianization is coordinatized by (a1,a2,b1,b2).
        for (std::int64_t z : central)
            if (z >= G.q * G.q) throw Error("character_table: unexpected central element");
    }

    T.coords.resize(static_cast<std::size_t>(C));
    for (int c = 0; c < C; ++c) {
        Unpacked u = unpack(T.classes.reps[static_cast<std::size_t>(c)], G.q);
        T.coords[static_cast<std::size_t>(c)] = {u.a1, u.a2, u.b1, u.b2};
    }
    T.linear_count = G.q * G.q * G.q * G.q;

    // Z-orbits on classes. Central codes are exactly z = zc1*q + zc2.
    const std::int64_t ZN = G.q * G.q;
    std::vector<std::int32_t> orbit_of(static_cast<std::size_t>(C), -1);
    std::vector<std::int32_t> zc1(static_cast<std::size_t>(C), 0), zc2(static_cast<std::size_t>(C), 0);
    std::vector<std::int32_t> orbit_base;
    std::vector<std::vector<std::pair<std::int32_t, std::int32_t>>> orbit_stab;
    for (int c = 0; c < C; ++c) {
        if (orbit_of[static_cast<std::size_t>(c)] >= 0) continue;
        auto oid = static_cast<std::int32_t>(orbit_base.size());
        orbit_base.push_back(c);
        orbit_stab.emplace_back();
        for (std::int64_t z = 0; z < ZN; ++z) {
            std::int64_t target =
                T.classes.class_of[static_cast<std::size_t>(G.mul(z, T.classes.reps[static_cast<std::size_t>(c)]))];
            if (orbit_of[static_cast<std::size_t>(target)] < 0) {
                orbit_of[static_cast<std::size_t>(target)] = oid;
                zc1[static_cast<std::size_t>(target)] = static_cast<std::int32_t>(z / G.q);
                zc2[static_cast<std::size_t>(target)] = static_cast<std::int32_t>(z % G.q);
            }
            if (target == c)
                orbit_stab[static_cast<std::size_t>(oid)].emplace_back(
                    static_cast<std::int32_t>(z / G.q), static_cast<std::int32_t>(z % G.q));
        }
    }
    const int norbits = static_cast<int>(orbit_base.size());
    if (static_cast<std::int64_t>(norbits) != T.linear_count)
        throw Error("character_table: orbit count does not match the abelianization");

    // Blocks: one per nontrivial central character psi = (t1,t2).
    struct Block {
        std::int64_t t1, t2;
        std::vector<std::int32_t> orbits;        // ascending base class
        std::vector<std::int32_t> base_classes;  // per orbit
        std::vector<std::int32_t> pos_of_orbit;  // dense over orbit ids, -1 off block
        std::vector<Subspace> subspaces;
    };
    std::vector<Block> blocks;
    for (std::int64_t t1 = 0; t1 < G.q; ++t1) {
        for (std::int64_t t2 = 0; t2 < G.q; ++t2) {
            if (t1 == 0 && t2 == 0) continue;  // the linear block, handled parametrically
            Block blk;
            blk.t1 = t1;
            blk.t2 = t2;
            blk.pos_of_orbit.assign(static_cast<std::size_t>(norbits), -1);
            for (int o = 0; o < norbits; ++o) {
                bool ok = true;
                for (auto [s1, s2] : orbit_stab[static_cast<std::size_t>(o)])
                    if (mod_reduce(t1 * s1 + t2 * s2, G.q) != 0) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                blk.pos_of_orbit[static_cast<std::size_t>(o)] =
                    static_cast<std::int32_t>(blk.orbits.size());
                blk.orbits.push_back(static_cast<std::int32_t>(o));
                blk.base_classes.push_back(orbit_base[static_cast<std::size_t>(o)]);
            }
            if (blk.orbits.empty()) continue;
            const int w0 = static_cast<int>(blk.orbits.size());
            Subspace full;
            full.basis.assign(static_cast<std::size_t>(w0), Row(static_cast<std::size_t>(w0), 0));
            for (int i = 0; i < w0; ++i) {
                full.basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
                full.pivots.push_back(i);
            }
            blk.subspaces.push_back(std::move(full));
            blocks.push_back(std::move(blk));
        }
    }

    std::int64_t expected_nonlinear = 0;
    for (const auto& blk : blocks) expected_nonlinear += static_cast<std::int64_t>(blk.orbits.size());
    if (T.linear_count + expected_nonlinear != C)
        throw Error("character_table: block dimensions do not sum to the class count");

    // Phase of the basis vector at a class: psi(z)^-1 for the recorded z.
    auto phase_at = [&](const Block& blk, int cls) -> u64 {
        std::int64_t e = mod_reduce(blk.t1 * zc1[static_cast<std::size_t>(cls)] +
                                        blk.t2 * zc2[static_cast<std::size_t>(cls)],
                                    G.q);
        return zq_pow[static_cast<std::size_t>((G.q - e) % G.q)];
    };

    // Split every block into common eigenspaces of the class operators M_j.
    std::int64_t unsplit = 0;
    for (const auto& blk : blocks)
        if (blk.orbits.size() > 1) ++unsplit;
    for (int j = 0; j < C && unsplit > 0; ++j) {
        if (T.classes.sizes[static_cast<std::size_t>(j)] == 1) continue;  // central: already used
        // Member codes and their inverses for class j.
        std::uint32_t mb = T.classes.member_off[static_cast<std::size_t>(j)];
        std::uint32_t me = T.classes.member_off[static_cast<std::size_t>(j + 1)];
        std::vector<std::int64_t> inv_members;
        inv_members.reserve(me - mb);
        for (std::uint32_t t = mb; t < me; ++t)
            inv_members.push_back(G.inv(static_cast<std::int64_t>(T.classes.member_flat[t])));

        // (M_j v)[l] = sum over x in C_j of v[class(x^-1 g_l)].
        for (auto& blk : blocks) {
            std::int64_t before = 0;
            for (const auto& s : blk.subspaces)
                if (s.basis.size() > 1) ++before;
            if (before == 0) continue;
            const int w0 = static_cast<int>(blk.orbits.size());
            Mat Sj(static_cast<std::size_t>(w0), Row(static_cast<std::size_t>(w0), 0));
            for (int i = 0; i < w0; ++i) {
                std::int64_t gl = T.classes.reps[static_cast<std::size_t>(
                    blk.base_classes[static_cast<std::size_t>(i)])];
                Row& acc = Sj[static_cast<std::size_t>(i)];
                for (std::int64_t xin : inv_members) {
                    std::int32_t cls = T.classes.class_of[static_cast<std::size_t>(G.mul(xin, gl))];
                    std::int32_t o = orbit_of[static_cast<std::size_t>(cls)];
                    std::int32_t pos = blk.pos_of_orbit[static_cast<std::size_t>(o)];
                    if (pos >= 0) acc[static_cast<std::size_t>(pos)] =
                        F.add(acc[static_cast<std::size_t>(pos)], phase_at(blk, cls));
                }
            }
            // Sj[i][b] = (M_j v_b)[base class of orbit i]: one pass over the
            // members fills row i across every column b at once, because the
            // orbit supports are disjoint.
            std::vector<Subspace> next;
            for (auto& sub : blk.subspaces) {
                const int w = static_cast<int>(sub.basis.size());
                if (w == 1) {
                    next.push_back(std::move(sub));
                    continue;
                }
                // Restrict: SW[a][b] = (Sj * basis_b)[pivot_a].
                Mat SW(static_cast<std::size_t>(w), Row(static_cast<std::size_t>(w), 0));
                for (int b = 0; b < w; ++b) {
                    Row y(static_cast<std::size_t>(w0), 0);
                    for (int rr = 0; rr < w0; ++rr) {
                        u64 acc = 0;
                        const Row& srow = Sj[static_cast<std::size_t>(rr)];
                        const Row& bas = sub.basis[static_cast<std::size_t>(b)];
                        for (int cc = 0; cc < w0; ++cc)
                            acc = F.add(acc, F.mul(srow[static_cast<std::size_t>(cc)],
                                                   bas[static_cast<std::size_t>(cc)]));
                        y[static_cast<std::size_t>(rr)] = acc;
                    }
                    for (int a = 0; a < w; ++a)
                        SW[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                            y[static_cast<std::size_t>(sub.pivots[static_cast<std::size_t>(a)])];
                }
                Row cp = charpoly_mod(SW, F);
                std::vector<u64> roots;
                for (u64 lam = 0; lam < F.ell; ++lam) {
                    u64 v = 0;
                    for (auto it = cp.rbegin(); it != cp.rend(); ++it) v = F.add(F.mul(v, lam), *it);
                    if (v == 0) roots.push_back(lam);
                }
                if (roots.size() <= 1) {
                    next.push_back(std::move(sub));  // M_j does not refine this subspace
                    continue;
                }
                int total = 0;
                for (u64 lam : roots) {
                    Mat A = SW;
                    for (int t = 0; t < w; ++t)
                        A[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)] =
                            F.sub(A[static_cast<std::size_t>(t)][static_cast<std::size_t>(t)], lam);
                    std::vector<Row> ker = kernel_mod(std::move(A), F);
                    if (ker.empty()) continue;
                    std::vector<Row> lifted;
                    for (const Row& kv : ker) {
                        Row lift(static_cast<std::size_t>(w0), 0);
                        for (int t = 0; t < w; ++t) {
                            if (kv[static_cast<std::size_t>(t)] == 0) continue;
                            const Row& bas = sub.basis[static_cast<std::size_t>(t)];
                            for (int cc = 0; cc < w0; ++cc)
                                lift[static_cast<std::size_t>(cc)] =
                                    F.add(lift[static_cast<std::size_t>(cc)],
                                          F.mul(kv[static_cast<std::size_t>(t)],
                                                bas[static_cast<std::size_t>(cc)]));
                        }
                        lifted.push_back(std::move(lift));
                    }
                    Subspace piece = echelonize(std::move(lifted), F);
                    total += static_cast<int>(piece.basis.size());
                    next.push_back(std::move(piece));
                }
                if (total != w)
                    throw Error("character_table: class operator is not semisimple on a block");
            }
            blk.subspaces = std::move(next);
            std::int64_t after = 0;
            for (const auto& s : blk.subspaces)
                if (s.basis.size() > 1) ++after;
            unsplit += (after > 0 ? 1 : 0) - 1;  // `before` was > 0
        }
    }
    if (unsplit > 0) throw Error("character_table: class operators failed to split a block");

    // Recover characters from the one-dimensional common eigenspaces.
    const std::int64_t root_bound = isqrt64(G.order);
    std::vector<std::pair<std::int64_t, std::vector<std::uint32_t>>> nonlinear;
    for (const auto& blk : blocks) {
        for (const auto& sub : blk.subspaces) {
            const Row& kv = sub.basis[0];
            std::vector<u64> w(static_cast<std::size_t>(C), 0);
            for (int c = 0; c < C; ++c) {
                std::int32_t o = orbit_of[static_cast<std::size_t>(c)];
                std::int32_t pos = blk.pos_of_orbit[static_cast<std::size_t>(o)];
                if (pos < 0) continue;
                if (kv[static_cast<std::size_t>(pos)] == 0) continue;
                w[static_cast<std::size_t>(c)] = F.mul(kv[static_cast<std::size_t>(pos)], phase_at(blk, c));
            }
            u64 we = w[static_cast<std::size_t>(T.classes.identity_class)];
            if (we == 0) throw Error("character_table: eigenvector vanishes at the identity class");
            u64 we_inv = F.inv(we);
            std::vector<u64> u(static_cast<std::size_t>(C));
            for (int c = 0; c < C; ++c) u[static_cast<std::size_t>(c)] = F.mul(w[static_cast<std::size_t>(c)], we_inv);
            u64 s = 0;
            for (int c = 0; c < C; ++c)
                s = F.add(s, F.mul(static_cast<u64>(T.classes.sizes[static_cast<std::size_t>(c)] % T.ell),
                                   F.mul(u[static_cast<std::size_t>(c)],
                                         u[static_cast<std::size_t>(
                                             T.classes.inverse_class[static_cast<std::size_t>(c)])])));
            u64 d2 = F.mul(static_cast<u64>(G.order % T.ell), F.inv(s));
            std::int64_t deg = -1;
            for (std::int64_t cand = 1; cand <= root_bound; ++cand) {
                if (F.mul(static_cast<u64>(cand), static_cast<u64>(cand)) == d2) {
                    deg = cand;
                    break;
                }
            }
            if (deg < 0) throw Error("character_table: no integral degree below sqrt|G|");
            std::vector<std::uint32_t> row(static_cast<std::size_t>(C));
            for (int c = 0; c < C; ++c)
                row[static_cast<std::size_t>(c)] = static_cast<std::uint32_t>(F.mul(
                    static_cast<u64>(deg),
                    u[static_cast<std::size_t>(T.classes.inverse_class[static_cast<std::size_t>(c)])]));
            nonlinear.emplace_back(deg, std::move(row));
        }
    }
    std::sort(nonlinear.begin(), nonlinear.end());
    for (auto& [deg, row] : nonlinear) {
        T.nonlinear_degrees.push_back(deg);
        T.nonlinear_rows.push_back(std::move(row));
    }

    // Burnside checks: character count and the degree square sum.
    if (T.char_count() != C) throw Error("character_table: character count != class count");
    std::int64_t sum_sq = T.linear_count;
    for (std::int64_t d : T.nonlinear_degrees) sum_sq += d * d;
    if (sum_sq != G.order) throw Error("character_table: sum of squared degrees != |G|");
    return T;
}

// ---------------------------------------------------------------------------
// Twist orbits
// ---------------------------------------------------------------------------

namespace {

struct RowHash {
    std::size_t operator()(const std::vector<std::uint32_t>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint32_t x : v) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return h;
    }
};

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    }
    int find(int a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
};

std::vector<std::int64_t> twist_orbits_impl(const CharacterTable& table, std::int64_t dim) {
    if (dim == 1) {
        // The degree-1 characters form a single orbit under their own action.
        return table.linear_count > 0 ? std::vector<std::int64_t>{table.linear_count}
                                      : std::vector<std::int64_t>{};
    }
    const int C = table.classes.count();
    Fp F{static_cast<u64>(table.ell)};
    std::vector<int> idx;
    for (std::size_t i = 0; i < table.nonlinear_rows.size(); ++i)
        if (table.nonlinear_degrees[i] == dim) idx.push_back(static_cast<int>(i));
    if (idx.empty()) return {};

    std::unordered_map<std::vector<std::uint32_t>, int, RowHash> row_index;
    for (int i : idx) row_index.emplace(table.nonlinear_rows[static_cast<std::size_t>(i)], i);

    // Rows of the four generator characters chi_{e_s}.
    std::vector<std::vector<u64>> gen_rows(4, std::vector<u64>(static_cast<std::size_t>(C)));
    for (int s = 0; s < 4; ++s)
        for (int c = 0; c < C; ++c)
            gen_rows[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)] = F.pow(
                static_cast<u64>(table.zeta_q),
                static_cast<u64>(mod_reduce(table.coords[static_cast<std::size_t>(c)][static_cast<std::size_t>(s)],
                                            table.q)));

    UnionFind uf(static_cast<int>(table.nonlinear_rows.size()));
    std::vector<std::uint32_t> prod(static_cast<std::size_t>(C));
    for (int i : idx) {
        const auto& row = table.nonlinear_rows[static_cast<std::size_t>(i)];
        for (int s = 0; s < 4; ++s) {
            for (int c = 0; c < C; ++c)
                prod[static_cast<std::size_t>(c)] = static_cast<std::uint32_t>(
                    F.mul(row[static_cast<std::size_t>(c)],
                          gen_rows[static_cast<std::size_t>(s)][static_cast<std::size_t>(c)]));
            auto it = row_index.find(prod);
            if (it == row_index.end())
                throw Error("twist_orbit_count: twisted character missing from the table");
            uf.unite(i, it->second);
        }
    }
    std::unordered_map<int, std::int64_t> orbit_sizes;
    for (int i : idx) ++orbit_sizes[uf.find(i)];
    std::vector<std::int64_t> sizes;
    for (auto& [root, size] : orbit_sizes) sizes.push_back(size);
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace

std::int64_t twist_orbit_count(const CharacterTable& table, std::int64_t dim) {
    return static_cast<std::int64_t>(twist_orbits_impl(table, dim).size());
}

std::vector<std::int64_t> twist_orbit_sizes(const CharacterTable& table, std::int64_t dim) {
    return twist_orbits_impl(table, dim);
}

// ---------------------------------------------------------------------------
// Comparison against the closed form
// ---------------------------------------------------------------------------

CompareReport compare(const QuadRing& ring, std::int64_t p, int k, int n,
                      std::int64_t order_guard, std::int64_t class_guard) {
    if (n < 0) throw InputError("compare: n must be >= 0");
    FiniteHeisenberg G = quotient_group(ring, p, k, order_guard);
    CharacterTable table = character_table(G, class_guard);
    CompareReport rep;
    rep.oracle_count = twist_orbit_count(table, ipow_checked(p, n));
    rep.closed_form = closed_form_count(ring, p, n);
    rep.agree = rep.oracle_count == rep.closed_form;
    rep.sufficient = k >= n;
    return rep;
}

OracleCensus oracle_census(const QuadRing& ring, std::int64_t p, int k, std::int64_t order_guard,
                           std::int64_t class_guard) {
    FiniteHeisenberg G = quotient_group(ring, p, k, order_guard);
    CharacterTable table = character_table(G, class_guard);
    OracleCensus census;
    census.group_order = G.order;
    census.class_count = table.classes.count();

    std::vector<std::pair<std::int64_t, std::int64_t>> hist;
    hist.emplace_back(1, table.linear_count);
    for (std::int64_t d : table.nonlinear_degrees) {
        if (!hist.empty() && hist.back().first == d)
            ++hist.back().second;
        else
            hist.emplace_back(d, 1);
    }
    census.degree_census = hist;

    for (auto [deg, cnt] : hist) {
        OracleCensusRow row;
        row.dim = deg;
        int n = 0;
        for (std::int64_t v = deg; v > 1; v /= p) ++n;
        row.n = n;
        row.orbit_count = twist_orbit_count(table, deg);
        row.closed_form = closed_form_count(ring, p, n);
        row.agree = row.orbit_count == row.closed_form;
        row.sufficient = k >= n;
        census.rows.push_back(row);
    }
    return census;
}

}  // namespace heiszeta
