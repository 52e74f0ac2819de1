#include "braidforge/garside.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace braidforge {

namespace {

// One-line notation helpers. images[j-1] is the bottom position of the
// strand entering at top position j.

std::vector<int> inverse_of(const std::vector<int>& images) {
    std::vector<int> inv(images.size());
    for (int j = 0; j < static_cast<int>(images.size()); ++j) inv[images[j] - 1] = j + 1;
    return inv;
}

bool identity_images(const std::vector<int>& images) {
    for (int j = 0; j < static_cast<int>(images.size()); ++j)
        if (images[j] != j + 1) return false;
    return true;
}

bool reversal_images(const std::vector<int>& images) {
    const int n = static_cast<int>(images.size());
    for (int j = 0; j < n; ++j)
        if (images[j] != n - j) return false;
    return true;
}

// Makes the pair (a, b) left-weighted: while some sigma_i left-divides b and
// a * sigma_i is still a permutation braid, move sigma_i across the boundary.
// sigma_i left-divides b iff i is a descent of b; a * sigma_i stays simple
// iff the strands ending at positions i, i+1 of a have not crossed, i.e. i is
// not a descent of a^{-1}.
bool rebalance(std::vector<int>& a, std::vector<int>& b) {
    const int p = static_cast<int>(a.size());
    bool moved = false;
    for (;;) {
        const std::vector<int> ainv = inverse_of(a);
        int pick = 0;
        for (int i = 1; i < p; ++i) {
            if (b[i - 1] > b[i] && ainv[i - 1] < ainv[i]) {
                pick = i;
                break;
            }
        }
        if (pick == 0) return moved;
        std::swap(a[ainv[pick - 1] - 1], a[ainv[pick] - 1]);  // a <- a * sigma_pick
        std::swap(b[pick - 1], b[pick]);                      // b <- sigma_pick^{-1} * b
        moved = true;
    }
}

NormalForm normal_form_of_factors(int strands, std::vector<std::vector<int>> fs) {
    // Bubble to the global left-weighted fixpoint. Letters only ever move
    // left, so a transfer at (i-1, i) can break at most the pair (i-2, i-1).
    std::size_t i = 1;
    while (i < fs.size()) {
        const bool moved = rebalance(fs[i - 1], fs[i]);
        if (identity_images(fs[i])) {
            fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(i));
            if (moved && i > 1) --i;
            continue;
        }
        if (moved && i > 1)
            --i;
        else
            ++i;
    }

    NormalForm nf;
    nf.strands = strands;
    std::size_t lead = 0;
    while (lead < fs.size() && reversal_images(fs[lead])) ++lead;
    nf.delta_power = static_cast<int>(lead);
    nf.factors.reserve(fs.size() - lead);
    for (std::size_t j = lead; j < fs.size(); ++j)
        nf.factors.emplace_back(Permutation::from_images(std::move(fs[j])));
    return nf;
}

std::vector<int> half_twist_spelling(int strands) {
    return SimpleElement::half_twist(strands).lex_least_word();
}

// Fixed half-twist spelling used by the oracle prefix test:
// (sigma_1..sigma_{p-1})(sigma_1..sigma_{p-2})...(sigma_1).
std::vector<int> oracle_delta_pattern(int strands) {
    std::vector<int> out;
    for (int top = strands - 1; top >= 1; --top)
        for (int i = 1; i <= top; ++i) out.push_back(i);
    return out;
}

bool has_prefix(const std::string& word, const std::string& prefix) {
    return word.size() >= prefix.size() &&
           std::equal(prefix.begin(), prefix.end(), word.begin());
}

std::string encode(const BraidWord& w) {
    std::string s;
    s.reserve(w.letters().size());
    for (int g : w.letters()) s.push_back(static_cast<char>(g));
    return s;
}

std::string encode(const std::vector<int>& letters) {
    std::string s;
    s.reserve(letters.size());
    for (int g : letters) s.push_back(static_cast<char>(g));
    return s;
}

void check_oracle_input(const BraidWord& w, const OracleLimits& limits) {
    if (!is_positive(w)) throw std::invalid_argument("oracle: negative letter present");
    if (w.length() > limits.max_len)
        throw std::invalid_argument("oracle: word length " + std::to_string(w.length()) +
                                    " exceeds bound " + std::to_string(limits.max_len));
    if (w.strands() > limits.max_strands)
        throw std::invalid_argument("oracle: strand count " + std::to_string(w.strands()) +
                                    " exceeds bound " + std::to_string(limits.max_strands));
}

// Enumerates the whole positive equivalence class of `start` under
// sigma_i sigma_j = sigma_j sigma_i (|i-j| >= 2) and
// sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i sigma_{i+1}.
// Calls visit(word) on each member; stops early if visit returns true.
bool enumerate_class(const std::string& start, const std::function<bool(const std::string&)>& visit) {
    std::unordered_set<std::string> seen;
    std::queue<std::string> todo;
    seen.insert(start);
    todo.push(start);
    if (visit(start)) return true;
    const auto offer = [&](std::string next) {
        if (seen.insert(next).second) todo.push(std::move(next));
    };
    while (!todo.empty()) {
        const std::string cur = todo.front();
        todo.pop();
        const int n = static_cast<int>(cur.size());
        for (int j = 0; j + 1 < n; ++j) {
            const int a = cur[j], b = cur[j + 1];
            if (std::abs(a - b) >= 2) {
                std::string next = cur;
                std::swap(next[j], next[j + 1]);
                if (seen.find(next) == seen.end()) {
                    if (visit(next)) return true;
                    offer(std::move(next));
                }
            }
            if (j + 2 < n && cur[j + 2] == a && std::abs(a - b) == 1) {
                std::string next = cur;
                next[j] = static_cast<char>(b);
                next[j + 1] = static_cast<char>(a);
                next[j + 2] = static_cast<char>(b);
                if (seen.find(next) == seen.end()) {
                    if (visit(next)) return true;
                    offer(std::move(next));
                }
            }
        }
    }
    return false;
}

}  // namespace

SimpleElement::SimpleElement(Permutation perm) : perm_(std::move(perm)) {}

SimpleElement SimpleElement::identity(int strands) {
    return SimpleElement(Permutation(strands));
}

SimpleElement SimpleElement::generator(int strands, int i) {
    return SimpleElement(Permutation::transposition(strands, i));
}

SimpleElement SimpleElement::half_twist(int strands) {
    return SimpleElement(Permutation::order_reversal(strands));
}

bool SimpleElement::is_half_twist() const {
    return reversal_images(perm_.images());
}

int SimpleElement::length() const {
    const auto& im = perm_.images();
    int inversions = 0;
    for (std::size_t j = 0; j < im.size(); ++j)
        for (std::size_t l = j + 1; l < im.size(); ++l)
            if (im[j] > im[l]) ++inversions;
    return inversions;
}

std::vector<int> SimpleElement::starting_set() const {
    const auto& im = perm_.images();
    std::vector<int> out;
    for (int i = 1; i < strands(); ++i)
        if (im[i - 1] > im[i]) out.push_back(i);
    return out;
}

std::vector<int> SimpleElement::finishing_set() const {
    const std::vector<int> inv = inverse_of(perm_.images());
    std::vector<int> out;
    for (int i = 1; i < strands(); ++i)
        if (inv[i - 1] > inv[i]) out.push_back(i);
    return out;
}

std::vector<int> SimpleElement::lex_least_word() const {
    std::vector<int> im = perm_.images();
    std::vector<int> word;
    for (;;) {
        int pick = 0;
        for (int i = 1; i < strands(); ++i) {
            if (im[i - 1] > im[i]) {
                pick = i;
                break;
            }
        }
        if (pick == 0) break;
        word.push_back(pick);
        std::swap(im[pick - 1], im[pick]);  // strip sigma_pick from the left
    }
    return word;
}

BraidWord NormalForm::word() const {
    std::vector<int> letters;
    if (delta_power > 0) {
        const std::vector<int> delta = half_twist_spelling(strands);
        for (int rep = 0; rep < delta_power; ++rep)
            letters.insert(letters.end(), delta.begin(), delta.end());
    }
    for (const SimpleElement& s : factors) {
        const std::vector<int> part = s.lex_least_word();
        letters.insert(letters.end(), part.begin(), part.end());
    }
    return BraidWord(strands, std::move(letters));
}

NormalForm normal_form(const BraidWord& w) {
    if (!is_positive(w)) throw std::invalid_argument("normal_form: negative letter present");
    std::vector<std::vector<int>> fs;
    fs.reserve(w.letters().size());
    for (int g : w.letters())
        fs.push_back(Permutation::transposition(w.strands(), g).images());
    return normal_form_of_factors(w.strands(), std::move(fs));
}

TwistExtraction extract_full_twists(const BraidWord& w) {
    if (w.strands() < 2)
        throw std::invalid_argument("extract_full_twists: needs at least 2 strands");
    NormalForm nf = normal_form(w);
    TwistExtraction out;
    out.k_max = nf.delta_power / 2;
    out.remainder = NormalForm{nf.strands, nf.delta_power % 2, std::move(nf.factors)};
    return out;
}

bool positive_equal(const BraidWord& u, const BraidWord& v) {
    if (u.strands() != v.strands())
        throw std::invalid_argument("positive_equal: strand mismatch");
    return normal_form(u) == normal_form(v);
}

bool divisible_on_left_by_generator(const NormalForm& nf, int i) {
    if (i < 1 || i >= nf.strands)
        throw std::invalid_argument("generator index out of range");
    if (nf.delta_power > 0) return true;
    if (nf.factors.empty()) return false;
    const auto& im = nf.factors.front().perm().images();
    return im[i - 1] > im[i];
}

NormalForm left_quotient_by_generator(const NormalForm& nf, int i) {
    if (!divisible_on_left_by_generator(nf, i))
        throw std::invalid_argument("left_quotient_by_generator: not divisible");
    std::vector<std::vector<int>> fs;
    if (nf.delta_power > 0) {
        // Delta = sigma_i * (Delta with the descent at i stripped).
        std::vector<int> rest = Permutation::order_reversal(nf.strands).images();
        std::swap(rest[i - 1], rest[i]);
        fs.push_back(std::move(rest));
        const std::vector<int> delta = Permutation::order_reversal(nf.strands).images();
        for (int rep = 1; rep < nf.delta_power; ++rep) fs.push_back(delta);
        for (const SimpleElement& s : nf.factors) fs.push_back(s.perm().images());
    } else {
        std::vector<int> head = nf.factors.front().perm().images();
        std::swap(head[i - 1], head[i]);
        if (!identity_images(head)) fs.push_back(std::move(head));
        for (std::size_t j = 1; j < nf.factors.size(); ++j)
            fs.push_back(nf.factors[j].perm().images());
    }
    return normal_form_of_factors(nf.strands, std::move(fs));
}

OracleLimits oracle_limits_from_env() {
    OracleLimits limits;
    if (const char* env = std::getenv("BRAIDFORGE_ORACLE_MAXLEN")) {
        const int v = std::atoi(env);
        if (v > 0) limits.max_len = v;
    }
    return limits;
}

bool oracle_divisible_by_delta(const BraidWord& w, int power, const OracleLimits& limits) {
    if (power < 1) throw std::invalid_argument("oracle: power must be positive");
    check_oracle_input(w, limits);
    if (w.strands() < 2) return true;  // Delta on one strand is trivial
    std::vector<int> target;
    const std::vector<int> delta = oracle_delta_pattern(w.strands());
    for (int rep = 0; rep < power; ++rep) target.insert(target.end(), delta.begin(), delta.end());
    if (static_cast<int>(target.size()) > w.length()) return false;
    const std::string prefix = encode(target);
    return enumerate_class(encode(w),
                           [&](const std::string& word) { return has_prefix(word, prefix); });
}

int oracle_max_full_twists(const BraidWord& w, const OracleLimits& limits) {
    check_oracle_input(w, limits);
    if (w.strands() < 2)
        throw std::invalid_argument("oracle: full twists need at least 2 strands");
    const std::string delta = encode(oracle_delta_pattern(w.strands()));
    int best_halves = 0;  // most leading half-twist spellings over the class
    enumerate_class(encode(w), [&](const std::string& word) {
        int halves = 0;
        std::size_t at = 0;
        while (word.size() - at >= delta.size() &&
               std::equal(delta.begin(), delta.end(), word.begin() + static_cast<std::ptrdiff_t>(at))) {
            ++halves;
            at += delta.size();
        }
        best_halves = std::max(best_halves, halves);
        return false;
    });
    return best_halves / 2;
}

}  // namespace braidforge
