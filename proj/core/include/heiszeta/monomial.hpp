#pragma once

#include <cstdint>
#include <vector>

#include "heiszeta/errors.hpp"

namespace heiszeta {

// Generalized permutation matrix over the root_order-th roots of unity:
// the entry zeta^exps[c] sits in row perm[c], column c. All arithmetic on
// exponents is exact mod root_order.
struct MonomialMatrix {
    std::int64_t root_order = 1;
    std::vector<std::int32_t> perm;
    std::vector<std::int64_t> exps;

    int dim() const { return static_cast<int>(perm.size()); }
    bool operator==(const MonomialMatrix&) const = default;
};

MonomialMatrix mm_identity(int n, std::int64_t root_order);
MonomialMatrix mm_scalar(int n, std::int64_t root_order, std::int64_t e);
MonomialMatrix mm_mul(const MonomialMatrix& x, const MonomialMatrix& y);
MonomialMatrix mm_inverse(const MonomialMatrix& x);
// [x, y] = x y x^-1 y^-1.
MonomialMatrix mm_commutator(const MonomialMatrix& x, const MonomialMatrix& y);
MonomialMatrix mm_direct_sum(const MonomialMatrix& x, const MonomialMatrix& y);

bool mm_is_identity(const MonomialMatrix& x);
bool mm_is_scalar(const MonomialMatrix& x, std::int64_t* exp_out = nullptr);
bool mm_is_diagonal(const MonomialMatrix& x);
bool mm_is_permutation(const MonomialMatrix& x);  // all exponents zero

// Canonical form in Z[zeta_{p^r}]: a length-p^r integer vector of exponent
// counts reduced modulo the cyclotomic polynomial Phi_{p^r}. Two cyclotomic
// integers are equal iff their reduced vectors are equal.
void cyclotomic_reduce(std::vector<std::int64_t>& counts, std::int64_t p);

}  // namespace heiszeta
