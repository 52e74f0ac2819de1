#pragma once

#include "braidforge/braid.hpp"
#include "braidforge/garside.hpp"

#include <optional>
#include <set>
#include <vector>

// Combinatorial satellite operations on braid closures: deleting closure
// components, adjoining the braid axis as a new component, and matching the
// single-full-twist companion form B0 (s1..s_{a-2})^j (s1..s_{a-1})^a with
// span(B0 (s1..s_{a-2})^j) inside [1, a-1].

namespace braidforge {

struct DeletionResult {
    BraidWord braid;
    int removed_letters = 0;
    // surviving old strand id (top position) -> new top position
    std::vector<std::pair<int, int>> strand_map;
};

// Drops every letter in which a strand of a deleted component participates
// and reindexes the survivors; the result's closure is the sublink of the
// surviving components. Mixed-sign words allowed.
DeletionResult delete_components(const BraidWord& w, const std::set<int>& ids);

// iota(w) * (sigma_n ... sigma_1 sigma_1 ... sigma_n) on n+1 strands: the new
// strand encircles all others once, adding the braid axis as a component.
BraidWord adjoin_axis(const BraidWord& w);

struct Case2Match {
    int a = 2;               // strand count
    BraidWord b0;            // span within [1, a-1]
    int wheel_power = 0;     // exponent j of the (sigma_1..sigma_{a-2})^j factor
    bool matched = false;
};

// Tests w = W * Delta_a^2 with W spanning [1, a-1]. By default reports the
// maximal j with W right-divisible by (sigma_1..sigma_{a-2})^j and b0 the
// remaining quotient. With declared_twists = k the split is quantized to the
// companion form's exponent j = (k-1)(a-1); the match then also requires that
// divisibility.
Case2Match match_case2_form(const BraidWord& w,
                            std::optional<int> declared_twists = std::nullopt);

}  // namespace braidforge
