#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "heiszeta/isoclass.hpp"

namespace heiszeta {

// The finite quotient H(O/p^k O): triples (alpha, beta, gamma) over O/p^k
// with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b'). Elements are packed
// residue tuples (six base-q digits) for throughput; q = p^k.
struct FiniteHeisenberg {
    QuadRing ring;
    std::int64_t p = 2;
    int k = 1;
    std::int64_t q = 2;      // p^k
    std::int64_t order = 64; // p^(6k)

    std::int64_t encode(std::int64_t a1, std::int64_t a2, std::int64_t b1, std::int64_t b2,
                        std::int64_t c1, std::int64_t c2) const;
    std::array<std::int64_t, 6> decode(std::int64_t code) const;
    std::int64_t mul(std::int64_t x, std::int64_t y) const;
    std::int64_t inv(std::int64_t x) const;
    std::int64_t element_order(std::int64_t x) const;

    // Images of the four non-central generators x, x_d, y, y_d.
    std::array<std::int64_t, 4> generators() const;
};

FiniteHeisenberg quotient_group(const QuadRing& ring, std::int64_t p, int k,
                                std::int64_t order_guard = 1'000'000);

struct ConjugacyClasses {
    std::vector<std::int64_t> reps;  // lexicographically least member per class
    std::vector<std::int64_t> sizes;
    std::vector<std::int32_t> class_of;  // indexed by element code
    std::vector<std::int32_t> inverse_class;
    // Members in CSR layout: member_flat[member_off[c] .. member_off[c+1]).
    std::vector<std::uint32_t> member_flat;
    std::vector<std::uint32_t> member_off;
    int identity_class = 0;

    int count() const { return static_cast<int>(reps.size()); }
};

ConjugacyClasses conjugacy_classes(const FiniteHeisenberg& G);

// Full character table over F_ell, ell = 1 mod exp(G) and ell > 2 sqrt|G|
// (Burnside-Dixon). Linear characters are held parametrically through the
// abelianization; the nonlinear rows are materialized.
struct CharacterTable {
    std::int64_t group_order = 0;
    std::int64_t exponent = 0;
    std::int64_t ell = 0;
    std::int64_t q = 1;       // p^k
    std::int64_t zeta_q = 1;  // order-q root of unity in F_ell
    ConjugacyClasses classes;
    std::vector<std::array<std::int64_t, 4>> coords;  // abelianization coords per class rep
    std::int64_t linear_count = 0;
    std::vector<std::vector<std::uint32_t>> nonlinear_rows;  // values per class
    std::vector<std::int64_t> nonlinear_degrees;

    std::int64_t char_count() const {
        return linear_count + static_cast<std::int64_t>(nonlinear_rows.size());
    }
    std::int64_t degree(std::int64_t chi) const;
    std::int64_t value(std::int64_t chi, std::int64_t cls) const;
};

CharacterTable character_table(const FiniteHeisenberg& G, std::int64_t class_guard = 3000);

// Orbits of the group of degree-1 characters acting on the degree-`dim`
// characters by pointwise product.
std::int64_t twist_orbit_count(const CharacterTable& table, std::int64_t dim);
std::vector<std::int64_t> twist_orbit_sizes(const CharacterTable& table, std::int64_t dim);

struct CompareReport {
    std::int64_t oracle_count = 0;
    std::int64_t closed_form = 0;
    bool agree = false;
    bool sufficient = false;  // k >= n, the proven-sufficient quotient depth
};

CompareReport compare(const QuadRing& ring, std::int64_t p, int k, int n,
                      std::int64_t order_guard = 1'000'000, std::int64_t class_guard = 3000);

struct OracleCensusRow {
    std::int64_t dim = 1;
    int n = 0;
    std::int64_t orbit_count = 0;
    std::int64_t closed_form = 0;
    bool agree = false;
    bool sufficient = false;
};

struct OracleCensus {
    std::int64_t group_order = 0;
    std::int64_t class_count = 0;
    std::vector<std::pair<std::int64_t, std::int64_t>> degree_census;  // (degree, count)
    std::vector<OracleCensusRow> rows;
};

OracleCensus oracle_census(const QuadRing& ring, std::int64_t p, int k,
                           std::int64_t order_guard = 1'000'000, std::int64_t class_guard = 3000);

}  // namespace heiszeta
