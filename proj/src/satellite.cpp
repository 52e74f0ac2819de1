#include "braidforge/satellite.hpp"

#include "braidforge/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace braidforge {

DeletionResult delete_components(const BraidWord& w, const std::set<int>& ids) {
    const ComponentPartition part = closure_components(w);
    if (ids.empty()) throw std::invalid_argument("delete_components: empty id set");
    {
        const std::vector<int> known = part.ids();
        for (int id : ids)
            if (std::find(known.begin(), known.end(), id) == known.end())
                throw std::invalid_argument("delete_components: unknown component id " +
                                            std::to_string(id));
        if (ids.size() == known.size())
            throw std::invalid_argument("delete_components: cannot delete every component");
    }

    const int p = w.strands();
    std::vector<char> keep_strand(p + 1, 1);
    for (const auto& cycle : part.cycles)
        if (ids.count(cycle.front()))
            for (int strand : cycle) keep_strand[strand] = 0;

    DeletionResult out;
    int new_pos = 0;
    for (int strand = 1; strand <= p; ++strand)
        if (keep_strand[strand]) out.strand_map.emplace_back(strand, ++new_pos);
    const int new_strands = new_pos;

    std::vector<int> strand_at(p);
    std::iota(strand_at.begin(), strand_at.end(), 1);
    std::vector<int> letters;
    for (int g : w.letters()) {
        const int i = std::abs(g);
        const bool keep_a = keep_strand[strand_at[i - 1]];
        const bool keep_b = keep_strand[strand_at[i]];
        if (keep_a && keep_b) {
            int rank = 0;  // surviving strands above the crossing
            for (int pos = 1; pos < i; ++pos)
                if (keep_strand[strand_at[pos - 1]]) ++rank;
            letters.push_back(g > 0 ? rank + 1 : -(rank + 1));
        } else {
            ++out.removed_letters;
        }
        std::swap(strand_at[i - 1], strand_at[i]);
    }
    out.braid = BraidWord(new_strands, std::move(letters));
    return out;
}

BraidWord adjoin_axis(const BraidWord& w) {
    if (!is_positive(w)) throw std::invalid_argument("adjoin_axis: non-positive word");
    const int n = w.strands();
    std::vector<int> letters = w.letters();
    for (int i = n; i >= 1; --i) letters.push_back(i);
    for (int i = 1; i <= n; ++i) letters.push_back(i);
    return BraidWord(n + 1, std::move(letters));
}

namespace {

// Greatest j with nf right-divisible by (sigma_1..sigma_{a-2})^j, working on
// the reversed braid where right division becomes left division. `exact`
// caps j and demands it is reached. Returns the final reversed quotient.
struct WheelSplit {
    int power = 0;
    NormalForm reversed_quotient;
    bool reached = true;
};

WheelSplit peel_wheel(const BraidWord& quotient_word, int a, std::optional<int> exact) {
    WheelSplit split;
    split.reversed_quotient = normal_form(reversed(quotient_word));
    if (a == 2) return split;  // (sigma_1..sigma_{a-2}) is empty: wheel_power stays 0
    while (!exact || split.power < *exact) {
        NormalForm attempt = split.reversed_quotient;
        bool ok = true;
        for (int i = a - 2; i >= 1; --i) {  // reversed wheel: sigma_{a-2}..sigma_1
            if (!divisible_on_left_by_generator(attempt, i)) {
                ok = false;
                break;
            }
            attempt = left_quotient_by_generator(attempt, i);
        }
        if (!ok) break;
        split.reversed_quotient = std::move(attempt);
        ++split.power;
    }
    if (exact && split.power != *exact) split.reached = false;
    return split;
}

}  // namespace

Case2Match match_case2_form(const BraidWord& w, std::optional<int> declared_twists) {
    if (!is_positive(w)) throw std::invalid_argument("match_case2_form: non-positive word");
    const int a = w.strands();
    if (a < 2) throw std::invalid_argument("match_case2_form: needs at least 2 strands");
    if (declared_twists && *declared_twists < 1)
        throw std::invalid_argument("match_case2_form: declared twist count must be positive");

    Case2Match match;
    match.a = a;
    match.b0 = BraidWord(a, {});

    const NormalForm nf = normal_form(w);
    // Exactly one full twist, and the quotient must avoid strand a: every
    // factor of its normal form fixes a (a Delta factor never does).
    if (nf.delta_power != 2) return match;
    for (const SimpleElement& s : nf.factors)
        if (s.perm().apply(a) != a) return match;

    const NormalForm quotient{a, 0, nf.factors};
    std::optional<int> exact;
    if (declared_twists) exact = (*declared_twists - 1) * (a - 1);
    const WheelSplit split = peel_wheel(quotient.word(), a, exact);
    if (!split.reached) return match;

    match.matched = true;
    match.wheel_power = split.power;
    match.b0 = reversed(split.reversed_quotient.word());
    return match;
}

}  // namespace braidforge
