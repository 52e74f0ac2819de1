#pragma once

#include "braidforge/braid.hpp"
#include "braidforge/laurent.hpp"

#include <vector>

// Link invariants of braid closures: closure components, pairwise linking
// numbers, Euler characteristic of the Bennequin surface, and the one-variable
// Alexander polynomial via the reduced Burau representation. Together these
// form the necessary-condition oracle for link equality claims.

namespace braidforge {

struct ComponentPartition {
    int strands = 1;
    // Cycles of the closure permutation, sorted by least element; a component
    // id is the least top position on its cycle.
    std::vector<std::vector<int>> cycles;

    int count() const { return static_cast<int>(cycles.size()); }
    std::vector<int> ids() const;
    int id_of(int strand) const;
};

ComponentPartition closure_components(const BraidWord& w);

struct LinkingMatrix {
    std::vector<int> ids;                     // component ids, increasing
    std::vector<std::vector<long long>> lk;   // symmetric, diagonal 0, indexed like ids

    long long pair(int id_i, int id_j) const;
    std::vector<long long> multiset() const;  // off-diagonal values, sorted ascending
    long long min_offdiag() const;            // requires >= 2 components
};

// Half the signed crossing count between distinct closure components; signs
// respected for mixed words. Raw per-pair counts must come out even.
LinkingMatrix linking_matrix(const BraidWord& w);

// strands - letters, the Euler characteristic of the Bennequin surface of a
// positive braid; a link invariant across positive representatives.
long long euler_characteristic(const BraidWord& w);

// det(reduced Burau(w) - I) * (t - 1) / (t^n - 1), normalized up to units.
LaurentPoly alexander_polynomial(const BraidWord& w);

struct InvariantBundle {
    int component_count = 0;
    long long euler_char = 0;
    std::vector<long long> linking_multiset;
    LaurentPoly alexander;

    friend bool operator==(const InvariantBundle&, const InvariantBundle&) = default;
};

InvariantBundle invariant_bundle(const BraidWord& w);

// Field-wise equality; agreement is necessary for link equality, not proof.
bool bundles_match(const InvariantBundle& a, const InvariantBundle& b);

}  // namespace braidforge
