#include "heiszeta/monomial.hpp"

#include "heiszeta/quad_ring.hpp"

namespace heiszeta {

namespace {

void require_same_shape(const MonomialMatrix& x, const MonomialMatrix& y) {
    if (x.dim() != y.dim() || x.root_order != y.root_order)
        throw ShapeMismatch("monomial matrices differ in dimension or root order");
}

}  // namespace

MonomialMatrix mm_identity(int n, std::int64_t root_order) {
    MonomialMatrix m;
    m.root_order = root_order;
    m.perm.resize(n);
    m.exps.assign(n, 0);
    for (int c = 0; c < n; ++c) m.perm[c] = c;
    return m;
}

MonomialMatrix mm_scalar(int n, std::int64_t root_order, std::int64_t e) {
    MonomialMatrix m = mm_identity(n, root_order);
    m.exps.assign(n, mod_reduce(e, root_order));
    return m;
}

MonomialMatrix mm_mul(const MonomialMatrix& x, const MonomialMatrix& y) {
    require_same_shape(x, y);
    const int n = x.dim();
    MonomialMatrix r;
    r.root_order = x.root_order;
    r.perm.resize(n);
    r.exps.resize(n);
    for (int c = 0; c < n; ++c) {
        int mid = y.perm[c];
        r.perm[c] = x.perm[mid];
        r.exps[c] = mod_reduce(y.exps[c] + x.exps[mid], x.root_order);
    }
    return r;
}

MonomialMatrix mm_inverse(const MonomialMatrix& x) {
    const int n = x.dim();
    MonomialMatrix r;
    r.root_order = x.root_order;
    r.perm.resize(n);
    r.exps.resize(n);
    for (int c = 0; c < n; ++c) {
        r.perm[x.perm[c]] = c;
        r.exps[x.perm[c]] = mod_reduce(-x.exps[c], x.root_order);
    }
    return r;
}

MonomialMatrix mm_commutator(const MonomialMatrix& x, const MonomialMatrix& y) {
    return mm_mul(mm_mul(x, y), mm_mul(mm_inverse(x), mm_inverse(y)));
}

MonomialMatrix mm_direct_sum(const MonomialMatrix& x, const MonomialMatrix& y) {
    require_same_shape(x, y);
    const int n = x.dim();
    MonomialMatrix r;
    r.root_order = x.root_order;
    r.perm.resize(2 * n);
    r.exps.resize(2 * n);
    for (int c = 0; c < n; ++c) {
        r.perm[c] = x.perm[c];
        r.exps[c] = x.exps[c];
        r.perm[n + c] = n + y.perm[c];
        r.exps[n + c] = y.exps[c];
    }
    return r;
}

bool mm_is_identity(const MonomialMatrix& x) {
    for (int c = 0; c < x.dim(); ++c)
        if (x.perm[c] != c || x.exps[c] != 0) return false;
    return true;
}

bool mm_is_scalar(const MonomialMatrix& x, std::int64_t* exp_out) {
    if (x.dim() == 0) return false;
    std::int64_t e = x.exps[0];
    for (int c = 0; c < x.dim(); ++c)
        if (x.perm[c] != c || x.exps[c] != e) return false;
    if (exp_out) *exp_out = e;
    return true;
}

bool mm_is_diagonal(const MonomialMatrix& x) {
    for (int c = 0; c < x.dim(); ++c)
        if (x.perm[c] != c) return false;
    return true;
}

bool mm_is_permutation(const MonomialMatrix& x) {
    for (int c = 0; c < x.dim(); ++c)
        if (x.exps[c] != 0) return false;
    return true;
}

void cyclotomic_reduce(std::vector<std::int64_t>& counts, std::int64_t p) {
    const std::int64_t M = static_cast<std::int64_t>(counts.size());
    if (M == 1) return;  // Z[zeta_1] = Z
    std::int64_t t = M / p;                 // p^(r-1)
    std::int64_t deg = t * (p - 1);         // deg Phi_{p^r}
    // x^deg = -(1 + x^t + ... + x^((p-2)t)) in Z[x]/Phi_{p^r}.
    for (std::int64_t k = M - 1; k >= deg; --k) {
        std::int64_t v = counts[k];
        if (v == 0) continue;
        counts[k] = 0;
        std::int64_t base = k - deg;
        for (std::int64_t j = 0; j <= p - 2; ++j) counts[base + j * t] -= v;
    }
}

}  // namespace heiszeta
