#pragma once

#include "braidforge/braid.hpp"

#include <vector>

// Garside structure of the positive braid monoid. Positive words are put
// into the unique left-weighted form Delta^m s_1 ... s_r, which decides the
// word problem and yields the largest k with w = b0 * (Delta^2)^k for a
// positive b0 (k = floor(m / 2), since Delta^2 is central).

namespace braidforge {

// A permutation braid: the positive braid in which each pair of strands
// crosses at most once. Uniquely determined by its permutation.
class SimpleElement {
public:
    explicit SimpleElement(Permutation perm);
    static SimpleElement identity(int strands);
    static SimpleElement generator(int strands, int i);
    static SimpleElement half_twist(int strands);  // Delta

    int strands() const { return perm_.size(); }
    const Permutation& perm() const { return perm_; }
    bool is_identity() const { return perm_.is_identity(); }
    bool is_half_twist() const;
    int length() const;  // inversion count = letters in any positive word

    // Generators i with sigma_i a left (resp. right) divisor.
    std::vector<int> starting_set() const;
    std::vector<int> finishing_set() const;

    // Lexicographically least positive word spelling this element.
    std::vector<int> lex_least_word() const;

    friend bool operator==(const SimpleElement&, const SimpleElement&) = default;

private:
    Permutation perm_;
};

struct NormalForm {
    int strands = 1;
    int delta_power = 0;
    std::vector<SimpleElement> factors;  // left-weighted, none identity or Delta

    int infimum() const { return delta_power; }
    int canonical_length() const { return static_cast<int>(factors.size()); }
    BraidWord word() const;  // deterministic positive spelling

    friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm normal_form(const BraidWord& w);

struct TwistExtraction {
    int k_max = 0;
    NormalForm remainder;  // maximal positive b0, canonicalized
};

TwistExtraction extract_full_twists(const BraidWord& w);

bool positive_equal(const BraidWord& u, const BraidWord& v);

// sigma_i as a left divisor of a normal form, and the exact quotient.
bool divisible_on_left_by_generator(const NormalForm& nf, int i);
NormalForm left_quotient_by_generator(const NormalForm& nf, int i);

// Test-support oracle: breadth-first enumeration of the positive-word
// equivalence class under the braid relations, checking for the fixed
// half-twist spelling (sigma_1..sigma_{p-1})(sigma_1..sigma_{p-2})...(sigma_1)
// repeated `power` times as a prefix. Exponential; bounded on purpose.
struct OracleLimits {
    int max_len = 14;
    int max_strands = 4;
};

OracleLimits oracle_limits_from_env();  // BRAIDFORGE_ORACLE_MAXLEN overrides max_len

bool oracle_divisible_by_delta(const BraidWord& w, int power, const OracleLimits& limits = {});

// Largest k with oracle_divisible_by_delta(w, 2k); enumerates the class once.
int oracle_max_full_twists(const BraidWord& w, const OracleLimits& limits = {});

}  // namespace braidforge
