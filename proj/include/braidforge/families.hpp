#pragma once

#include "braidforge/braid.hpp"

#include <string>
#include <string_view>
#include <vector>

// T-link and V-link constructors and the parametric families they come in:
// T((r1,s1),...,(rn,sn)) closes (s1..s_{r1-1})^{s1}...(s1..s_{rn-1})^{sn};
// a V-braid stacks descending (barred) factors, then ascending factors, then
// the final (s1..s_{p-1})^q.

namespace braidforge {

struct TLinkPair {
    int r = 2;
    int s = 1;
    friend bool operator==(const TLinkPair&, const TLinkPair&) = default;
};

struct TLinkSpec {
    std::vector<TLinkPair> pairs;
    int strands() const { return pairs.empty() ? 1 : pairs.back().r; }
    friend bool operator==(const TLinkSpec&, const TLinkSpec&) = default;
};

struct VBarredPair {
    int u = 2;
    int v = 1;
    friend bool operator==(const VBarredPair&, const VBarredPair&) = default;
};

struct VPlainPair {
    int r = 2;
    int s = 1;
    friend bool operator==(const VPlainPair&, const VPlainPair&) = default;
};

struct VLinkSpec {
    std::vector<VBarredPair> barred;
    std::vector<VPlainPair> plain;
    int p = 2;
    int q = 1;
    friend bool operator==(const VLinkSpec&, const VLinkSpec&) = default;
};

// Lenient mode admits zero exponents (factor dropped) and, for T-specs,
// equal adjacent r values; paper mode enforces the defining inequalities.
enum class SpecStrictness { lenient, paper };

void validate(const TLinkSpec& spec, SpecStrictness strictness = SpecStrictness::lenient);
void validate(const VLinkSpec& spec, SpecStrictness strictness = SpecStrictness::lenient);

// (sigma_1 ... sigma_{r-1})^s on `strands` strands; r = 1 gives the empty word.
BraidWord ascending_power(int strands, int r, int s);
// (sigma_{p-1} sigma_{p-2} ... sigma_{p-u+1})^v on p strands.
BraidWord descending_power(int strands, int u, int v);

BraidWord t_link_braid(const TLinkSpec& spec);
BraidWord v_link_braid(const VLinkSpec& spec);

struct FamilyParams {
    int a = 1;
    int b = 1;
    int c = 1;
    int k = 0;
    friend bool operator==(const FamilyParams&, const FamilyParams&) = default;
};

void validate(const FamilyParams& params);  // a,b,c >= 1, k >= 0, max(a,b,c) >= 2

// T((a+b+c, c), (a+b+2c+k(a+b+c), a+b+c))
TLinkSpec satellite_family_t(const FamilyParams& params);
// V((a+b+c, ~c), (a+b+c, (k+1)(a+b+c)+c)); the final exponent guarantees a
// literal (Delta^2)^{k+1} suffix.
VLinkSpec satellite_family_v(const FamilyParams& params);

TLinkSpec companion_t(int k);       // T((3,1),(3+2k,2))
TLinkSpec companion_mid_t(int k);   // T((3,1),(4+3k,3))
VLinkSpec companion_v(int k);       // V((2,2k),(3,3))

// Literal forms "T((3,1),(7,3))" and "V((2,~2),(3,3))"; '~' marks a barred
// exponent, the last V pair is the final (p,q).
TLinkSpec parse_tlink(std::string_view text);
VLinkSpec parse_vlink(std::string_view text);
std::string format_tlink(const TLinkSpec& spec);
std::string format_vlink(const VLinkSpec& spec);

}  // namespace braidforge
