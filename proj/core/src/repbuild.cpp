#include "heiszeta/repbuild.hpp"

#include <cstring>
#include <deque>
#include <string>
#include <unordered_set>

namespace heiszeta {

namespace {

struct Layout {
    std::int64_t R;   // p^r, the root order and outer cycle length
    std::int64_t Mm;  // p^m, the inner cycle length
    int N;            // dimension p^n

    int idx(std::int64_t i, std::int64_t j) const { return static_cast<int>(i * Mm + j); }
};

MonomialMatrix diag_from(const Layout& lay, std::int64_t coef_i, std::int64_t coef_j) {
    MonomialMatrix m = mm_identity(lay.N, lay.R);
    for (std::int64_t i = 0; i < lay.R; ++i)
        for (std::int64_t j = 0; j < lay.Mm; ++j)
            m.exps[lay.idx(i, j)] = mod_reduce(coef_i * i + coef_j * j, lay.R);
    return m;
}

MonomialMatrix shift_from(const Layout& lay, std::int64_t di, std::int64_t dj) {
    MonomialMatrix m = mm_identity(lay.N, lay.R);
    for (std::int64_t i = 0; i < lay.R; ++i)
        for (std::int64_t j = 0; j < lay.Mm; ++j)
            m.perm[lay.idx(i, j)] = lay.idx((i + di) % lay.R, (j + dj) % lay.Mm);
    return m;
}

}  // namespace

Representation build(const QuadRing& ring, const IsoclassLabel& label) {
    if (!check_label(ring, label)) throw InvalidLabel("build: label fails its invariants");

    Representation rep;
    rep.label = label;
    if (label.n == 0) {
        rep.A = rep.A_d = rep.B = rep.B_d = mm_identity(1, 1);
        rep.lambda_exp = rep.mu_exp = 0;
        return rep;
    }

    Layout lay;
    lay.R = ipow_checked(label.p, label.r);
    lay.Mm = ipow_checked(label.p, label.m);
    lay.N = static_cast<int>(lay.R * lay.Mm);
    const std::int64_t R = lay.R;
    const std::int64_t u = label.u;
    const std::int64_t l = label.l;

    if (label.kase == IsoCase::Case1) {
        // D = d resp. (d-1)/4 + l; the diagonal step of A_d is w = D - l^2,
        // with ord_p(w) = r - m so that zeta^(u w) has exact order p^m.
        std::int64_t D = ring.branch == RingBranch::Mod23 ? mod_reduce(ring.d, R)
                                                          : mod_reduce(ring.norm_n + l, R);
        std::int64_t w = mod_reduce(D - mod_mul(l, l, R), R);
        rep.A = diag_from(lay, u, 0);
        rep.A_d = diag_from(lay, mod_mul(u, l, R), mod_mul(u, w, R));
        rep.B = shift_from(lay, 1, 0);
        rep.B_d = shift_from(lay, l, 1);
        rep.lambda_exp = u;
        rep.mu_exp = mod_mul(u, l, R);
    } else {
        // Mirror construction: Lambda_d = zeta^u is primitive, Lambda = zeta^(u l).
        std::int64_t a = mod_mul(u, l, R);
        std::int64_t c2 = ring.branch == RingBranch::Mod23
                              ? mod_mul(a, mod_reduce(ring.d, R), R)
                              : mod_reduce(mod_mul(a, mod_reduce(ring.norm_n, R), R) + u, R);
        std::int64_t w2 = mod_reduce(u - mod_mul(l, c2, R), R);
        rep.A = diag_from(lay, u, 0);
        rep.A_d = diag_from(lay, c2, w2);
        rep.B = shift_from(lay, l, 1);
        rep.B_d = shift_from(lay, 1, 0);
        rep.lambda_exp = a;
        rep.mu_exp = u;
    }
    return rep;
}

bool verify_relations(const QuadRing& ring, const Representation& rep) {
    const MonomialMatrix& A = rep.A;
    const MonomialMatrix& A_d = rep.A_d;
    const MonomialMatrix& B = rep.B;
    const MonomialMatrix& B_d = rep.B_d;
    const std::int64_t R = A.root_order;
    const int N = A.dim();

    if (!mm_is_diagonal(A) || !mm_is_diagonal(A_d)) return false;
    if (!mm_is_permutation(B) || !mm_is_permutation(B_d)) return false;
    if (A.exps.empty() || A.exps[0] != 0) return false;  // goodness anchor

    MonomialMatrix lambda = mm_scalar(N, R, rep.lambda_exp);
    MonomialMatrix mu = mm_scalar(N, R, rep.mu_exp);

    if (mm_commutator(A, B) != lambda) return false;
    if (mm_commutator(A, B_d) != mu) return false;
    if (mm_commutator(A_d, B) != mu) return false;

    MonomialMatrix central_target =
        ring.branch == RingBranch::Mod23
            ? mm_scalar(N, R, mod_mul(rep.lambda_exp, mod_reduce(ring.d, R), R))
            : mm_scalar(N, R,
                        mod_reduce(mod_mul(rep.lambda_exp, mod_reduce(ring.norm_n, R), R) +
                                       rep.mu_exp,
                                   R));
    if (mm_commutator(A_d, B_d) != central_target) return false;

    if (!mm_is_identity(mm_commutator(A, A_d))) return false;
    if (!mm_is_identity(mm_commutator(B, B_d))) return false;
    return true;
}

namespace {

std::string mm_key(const MonomialMatrix& m) {
    std::string key;
    key.resize(m.perm.size() * sizeof(std::uint64_t));
    auto* out = reinterpret_cast<std::uint64_t*>(key.data());
    for (int c = 0; c < m.dim(); ++c)
        out[c] = (static_cast<std::uint64_t>(m.perm[c]) << 32) |
                 static_cast<std::uint64_t>(m.exps[c]);
    return key;
}

}  // namespace

bool verify_irreducible_generators(const std::vector<MonomialMatrix>& gens, std::int64_t p,
                                   std::int64_t group_cap) {
    if (gens.empty()) throw InputError("verify_irreducible: no generators");
    const std::int64_t M = gens[0].root_order;
    for (const auto& g : gens)
        if (g.dim() != gens[0].dim() || g.root_order != M)
            throw ShapeMismatch("verify_irreducible: mixed generator shapes");

    std::vector<std::int64_t> counts(static_cast<std::size_t>(M), 0);
    std::unordered_set<std::string> seen;
    std::deque<MonomialMatrix> frontier;

    MonomialMatrix id = mm_identity(gens[0].dim(), M);
    seen.insert(mm_key(id));
    frontier.push_back(id);
    std::int64_t order = 0;

    std::vector<int> fixed;
    while (!frontier.empty()) {
        MonomialMatrix g = std::move(frontier.front());
        frontier.pop_front();
        ++order;

        fixed.clear();
        for (int c = 0; c < g.dim(); ++c)
            if (g.perm[c] == c) fixed.push_back(c);
        for (int i : fixed)
            for (int j : fixed) counts[mod_reduce(g.exps[i] - g.exps[j], M)] += 1;

        for (const auto& gen : gens) {
            MonomialMatrix h = mm_mul(g, gen);
            if (seen.insert(mm_key(h)).second) {
                if (static_cast<std::int64_t>(seen.size()) > group_cap)
                    throw GroupTooLarge("verify_irreducible: image group exceeds guard");
                frontier.push_back(std::move(h));
            }
        }
    }

    cyclotomic_reduce(counts, p);
    if (counts[0] != order) return false;
    for (std::size_t k = 1; k < counts.size(); ++k)
        if (counts[k] != 0) return false;
    return true;
}

namespace {

std::vector<MonomialMatrix> six_images(const Representation& rep) {
    const int N = rep.A.dim();
    const std::int64_t R = rep.A.root_order;
    return {rep.A,         rep.A_d,
            rep.B,         rep.B_d,
            mm_scalar(N, R, rep.lambda_exp), mm_scalar(N, R, rep.mu_exp)};
}

}  // namespace

bool verify_irreducible(const Representation& rep, std::int64_t group_cap) {
    return verify_irreducible_generators(six_images(rep), rep.label.p, group_cap);
}

std::int64_t image_group_order(const Representation& rep, std::int64_t group_cap) {
    std::vector<MonomialMatrix> gens = six_images(rep);
    std::unordered_set<std::string> seen;
    std::deque<MonomialMatrix> frontier;
    MonomialMatrix id = mm_identity(gens[0].dim(), gens[0].root_order);
    seen.insert(mm_key(id));
    frontier.push_back(id);
    while (!frontier.empty()) {
        MonomialMatrix g = std::move(frontier.front());
        frontier.pop_front();
        for (const auto& gen : gens) {
            MonomialMatrix h = mm_mul(g, gen);
            if (seen.insert(mm_key(h)).second) {
                if (static_cast<std::int64_t>(seen.size()) > group_cap)
                    throw GroupTooLarge("image_group_order: image group exceeds guard");
                frontier.push_back(std::move(h));
            }
        }
    }
    return static_cast<std::int64_t>(seen.size());
}

std::pair<std::int64_t, std::int64_t> twist_invariants(const Representation& rep) {
    return {rep.lambda_exp, rep.mu_exp};
}

}  // namespace heiszeta
