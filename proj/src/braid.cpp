#include "braidforge/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <stdexcept>
#include <string>

namespace braidforge {

namespace {

int parse_int_token(std::string_view tok, const char* what, int index) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw std::invalid_argument(std::string("braid text: ") + what + " " +
                                    std::to_string(index) + ": '" + std::string(tok) +
                                    "' is not an integer");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Permutation::Permutation(int size) {
    if (size < 1) throw std::invalid_argument("permutation size must be positive");
    images_.resize(size);
    std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    if (n < 1) throw std::invalid_argument("permutation size must be positive");
    std::vector<char> seen(n, 0);
    for (int v : images) {
        if (v < 1 || v > n || seen[v - 1])
            throw std::invalid_argument("permutation images are not a bijection");
        seen[v - 1] = 1;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

Permutation Permutation::transposition(int size, int i) {
    Permutation p(size);
    if (i < 1 || i >= size) throw std::invalid_argument("transposition index out of range");
    std::swap(p.images_[i - 1], p.images_[i]);
    return p;
}

Permutation Permutation::order_reversal(int size) {
    Permutation p(size);
    std::reverse(p.images_.begin(), p.images_.end());
    return p;
}

int Permutation::apply(int pos) const {
    if (pos < 1 || pos > size()) throw std::invalid_argument("position out of range");
    return images_[pos - 1];
}

Permutation Permutation::then(const Permutation& next) const {
    if (size() != next.size()) throw std::invalid_argument("permutation size mismatch");
    std::vector<int> out(images_.size());
    for (int j = 0; j < size(); ++j) out[j] = next.images_[images_[j] - 1];
    Permutation p;
    p.images_ = std::move(out);
    return p;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int j = 0; j < size(); ++j) inv[images_[j] - 1] = j + 1;
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

bool Permutation::is_identity() const {
    for (int j = 0; j < size(); ++j)
        if (images_[j] != j + 1) return false;
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(images_.size(), 0);
    for (int j = 1; j <= size(); ++j) {
        if (seen[j - 1]) continue;
        std::vector<int> cycle;
        int cur = j;
        do {
            seen[cur - 1] = 1;
            cycle.push_back(cur);
            cur = images_[cur - 1];
        } while (cur != j);
        out.push_back(std::move(cycle));
    }
    return out;
}

BraidWord::BraidWord(int strands, std::vector<int> letters)
    : strands_(strands), letters_(std::move(letters)) {
    if (strands_ < 1) throw std::invalid_argument("braid needs at least one strand");
    for (std::size_t idx = 0; idx < letters_.size(); ++idx) {
        const int g = letters_[idx];
        if (g == 0)
            throw std::invalid_argument("letter " + std::to_string(idx + 1) + ": letter must be nonzero");
        if (std::abs(g) > strands_ - 1)
            throw std::invalid_argument("letter " + std::to_string(idx + 1) + ": generator " +
                                        std::to_string(std::abs(g)) + " out of range for " +
                                        std::to_string(strands_) + " strands");
    }
}

BraidWord parse_braid(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("braid text: malformed header, missing ':'");
    const std::string_view head = trim(text.substr(0, colon));
    if (head.empty())
        throw std::invalid_argument("braid text: malformed header, empty strand count");
    int strands = 0;
    {
        auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), strands);
        if (ec != std::errc{} || ptr != head.data() + head.size() || strands < 1)
            throw std::invalid_argument("braid text: malformed header, '" + std::string(head) +
                                        "' is not a positive strand count");
    }

    std::vector<int> letters;
    std::string_view rest = text.substr(colon + 1);
    int tok_index = 0;
    std::size_t pos = 0;
    while (pos < rest.size()) {
        while (pos < rest.size() && std::isspace(static_cast<unsigned char>(rest[pos]))) ++pos;
        if (pos >= rest.size()) break;
        std::size_t end = pos;
        while (end < rest.size() && !std::isspace(static_cast<unsigned char>(rest[end]))) ++end;
        ++tok_index;
        const int g = parse_int_token(rest.substr(pos, end - pos), "letter", tok_index);
        if (g == 0)
            throw std::invalid_argument("braid text: letter " + std::to_string(tok_index) +
                                        ": letter must be nonzero");
        if (std::abs(g) > strands - 1)
            throw std::invalid_argument("braid text: letter " + std::to_string(tok_index) +
                                        ": generator " + std::to_string(std::abs(g)) +
                                        " out of range for " + std::to_string(strands) + " strands");
        letters.push_back(g);
        pos = end;
    }
    return BraidWord(strands, std::move(letters));
}

std::string format_braid(const BraidWord& w) {
    std::string out = std::to_string(w.strands()) + ":";
    for (int g : w.letters()) {
        out += ' ';
        out += std::to_string(g);
    }
    return out;  // empty letter list prints as "3:"
}

Permutation permutation_of(const BraidWord& w) {
    const int p = w.strands();
    std::vector<int> strand_at(p);   // position -> strand id
    std::vector<int> pos_of(p);      // strand id -> position
    std::iota(strand_at.begin(), strand_at.end(), 1);
    std::iota(pos_of.begin(), pos_of.end(), 1);
    for (int g : w.letters()) {
        const int i = std::abs(g);
        const int a = strand_at[i - 1], b = strand_at[i];
        std::swap(strand_at[i - 1], strand_at[i]);
        pos_of[a - 1] = i + 1;
        pos_of[b - 1] = i;
    }
    return Permutation::from_images(std::move(pos_of));
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
    if (u.strands() != v.strands())
        throw std::invalid_argument("concat: strand mismatch (" + std::to_string(u.strands()) +
                                    " vs " + std::to_string(v.strands()) + ")");
    std::vector<int> letters = u.letters();
    letters.insert(letters.end(), v.letters().begin(), v.letters().end());
    return BraidWord(u.strands(), std::move(letters));
}

BraidWord full_twist(int strands, int twists) {
    if (twists < 0) throw std::invalid_argument("full_twist: twist count must be non-negative");
    if (strands < 1) throw std::invalid_argument("full_twist: strand count must be positive");
    if (strands < 2 && twists > 0)
        throw std::invalid_argument("full_twist: needs at least 2 strands");
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(twists) * strands * (strands - 1));
    for (int rep = 0; rep < twists * strands; ++rep)
        for (int i = 1; i < strands; ++i) letters.push_back(i);
    return BraidWord(strands, std::move(letters));
}

bool is_positive(const BraidWord& w) {
    return std::all_of(w.letters().begin(), w.letters().end(), [](int g) { return g > 0; });
}

bool span_within(const BraidWord& w, int q) {
    if (q < 1 || q > w.strands())
        throw std::invalid_argument("span_within: q out of range");
    return std::all_of(w.letters().begin(), w.letters().end(),
                       [q](int g) { return std::abs(g) <= q - 1; });
}

StrandTrace trace_strand(const BraidWord& w, int start) {
    if (start < 1 || start > w.strands())
        throw std::invalid_argument("trace_strand: start position out of range");
    const int p = w.strands();
    std::vector<int> strand_at(p);
    std::iota(strand_at.begin(), strand_at.end(), 1);

    StrandTrace trace;
    trace.start_position = start;
    int cur = start;
    trace.positions.push_back(cur);
    for (int idx = 0; idx < w.length(); ++idx) {
        const int g = w.letters()[idx];
        const int i = std::abs(g);
        if (cur == i || cur == i + 1) {
            const int other = (cur == i) ? i + 1 : i;
            trace.crossings.push_back({idx, strand_at[other - 1], g > 0 ? 1 : -1});
            cur = other;
        }
        std::swap(strand_at[i - 1], strand_at[i]);
        trace.positions.push_back(cur);
    }
    return trace;
}

BraidWord reversed(const BraidWord& w) {
    std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
    return BraidWord(w.strands(), std::move(letters));
}

BraidWord embedded(const BraidWord& w, int strands) {
    if (strands < w.strands())
        throw std::invalid_argument("embedded: target strand count too small");
    return BraidWord(strands, w.letters());
}

}  // namespace braidforge
