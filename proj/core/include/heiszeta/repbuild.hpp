#pragma once

#include <utility>

#include "heiszeta/isoclass.hpp"
#include "heiszeta/monomial.hpp"

namespace heiszeta {

// Images of the six generators under the representative of an isoclass.
// A, A_d are diagonal; B, B_d are pure permutations; the central images are
// the scalars zeta^lambda_exp and zeta^mu_exp.
struct Representation {
    IsoclassLabel label;
    MonomialMatrix A;
    MonomialMatrix A_d;
    MonomialMatrix B;
    MonomialMatrix B_d;
    std::int64_t lambda_exp = 0;
    std::int64_t mu_exp = 0;
};

// Construct the p^n-dimensional representative on the basis indexed by
// (i, j) in Z/p^r x Z/p^m. Case1: A = diag zeta^(u i), A_d = diag
// zeta^(u(l i + w j)) with w = D - l^2, B shifts i, B_d shifts (i by l, j
// by 1). Case2 is the mirror with the roles of (A,B) and (A_d,B_d)
// exchanged. Throws InvalidLabel when the label fails its invariants.
Representation build(const QuadRing& ring, const IsoclassLabel& label);

// All presentation relations, checked as exact monomial-matrix identities:
// [A,B] = Lambda, [A,B_d] = [A_d,B] = Lambda_d, [A_d,B_d] = Lambda^d
// (Mod23) or Lambda^((d-1)/4) Lambda_d (Mod1), [A,A_d] = [B,B_d] = I,
// plus the diagonal/permutation shape constraints.
bool verify_relations(const QuadRing& ring, const Representation& rep);

// Sum of |tr g|^2 over the group generated by the six images, accumulated
// as a canonical cyclotomic integer and compared with |group| exactly.
// Enumeration is by breadth-first closure with a hard size guard.
bool verify_irreducible(const Representation& rep, std::int64_t group_cap = 1'000'000);
bool verify_irreducible_generators(const std::vector<MonomialMatrix>& gens, std::int64_t p,
                                   std::int64_t group_cap = 1'000'000);

std::int64_t image_group_order(const Representation& rep, std::int64_t group_cap = 1'000'000);

// The twist-invariant pair (lambda_exp, mu_exp).
std::pair<std::int64_t, std::int64_t> twist_invariants(const Representation& rep);

}  // namespace heiszeta
