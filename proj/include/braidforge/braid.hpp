#pragma once

#include <string>
#include <string_view>
#include <vector>

// Words in the Artin generators of the braid group on an explicit number of
// strands. Positions and strand ids are 1-based everywhere; a braid on p
// strands has generators sigma_1..sigma_{p-1}, and a word stores letter +i
// for sigma_i, -i for its inverse. Words read top to bottom, left to right.

namespace braidforge {

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int size);  // identity
    static Permutation from_images(std::vector<int> images);
    static Permutation transposition(int size, int i);  // swaps i and i+1
    static Permutation order_reversal(int size);

    int size() const { return static_cast<int>(images_.size()); }
    int apply(int pos) const;
    const std::vector<int>& images() const { return images_; }
    Permutation then(const Permutation& next) const;  // this first, then next
    Permutation inverse() const;
    bool is_identity() const;

    // Cycles listed by increasing least element; each cycle starts at its
    // least element and follows the permutation.
    std::vector<std::vector<int>> cycles() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

class BraidWord {
public:
    BraidWord() = default;
    BraidWord(int strands, std::vector<int> letters);

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }

    friend bool operator==(const BraidWord&, const BraidWord&) = default;

private:
    int strands_ = 1;
    std::vector<int> letters_;
};

struct StrandTrace {
    struct Crossing {
        int letter_index;  // 0-based index into the word
        int partner;       // top position of the strand crossed with
        int sign;

        friend bool operator==(const Crossing&, const Crossing&) = default;
    };

    int start_position = 1;
    std::vector<int> positions;  // one entry per letter boundary; front() == start
    std::vector<Crossing> crossings;
};

// Text format "<p>: g1 g2 ... gn"; empty letter list allowed ("3:").
BraidWord parse_braid(std::string_view text);
std::string format_braid(const BraidWord& w);

// images[j] = bottom position reached by the strand entering at top position j.
Permutation permutation_of(const BraidWord& w);

BraidWord concat(const BraidWord& u, const BraidWord& v);

// (sigma_1 ... sigma_{p-1})^{p*k}, the k-fold positive full twist on p strands.
BraidWord full_twist(int strands, int twists);

bool is_positive(const BraidWord& w);

// True iff all crossings occur among strands 1..q, i.e. every |letter| <= q-1.
bool span_within(const BraidWord& w, int q);

// Follows the strand entering at top position `start` through the word once,
// without closing the braid.
StrandTrace trace_strand(const BraidWord& w, int start);

BraidWord reversed(const BraidWord& w);

// Same letters regarded on a larger strand count (trailing trivial strands).
BraidWord embedded(const BraidWord& w, int strands);

}  // namespace braidforge
