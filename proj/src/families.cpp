#include "braidforge/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace braidforge {

namespace {

void fail(const std::string& message) { throw std::invalid_argument(message); }

}  // namespace

void validate(const TLinkSpec& spec, SpecStrictness strictness) {
    int prev_r = 0;
    for (std::size_t i = 0; i < spec.pairs.size(); ++i) {
        const auto& [r, s] = spec.pairs[i];
        if (r < 2) fail("T-spec: r" + std::to_string(i + 1) + " must be at least 2");
        if (strictness == SpecStrictness::paper) {
            if (r <= prev_r) fail("T-spec: r values must strictly increase");
            if (s < 1) fail("T-spec: s" + std::to_string(i + 1) + " must be positive");
        } else {
            if (r < prev_r) fail("T-spec: r values must be non-decreasing");
            if (s < 0) fail("T-spec: s" + std::to_string(i + 1) + " must be non-negative");
        }
        prev_r = r;
    }
}

void validate(const VLinkSpec& spec, SpecStrictness strictness) {
    if (spec.p < 2) fail("V-spec: p must be at least 2");
    if (strictness == SpecStrictness::paper) {
        if (spec.q < spec.p) fail("V-spec: q must be at least p");
    } else if (spec.q < 0) {
        fail("V-spec: q must be non-negative");
    }
    int prev_u = 1;
    for (const auto& [u, v] : spec.barred) {
        if (u < 2 || u > spec.p) fail("V-spec: barred u must satisfy 2 <= u <= p");
        if (u <= prev_u) fail("V-spec: barred u values must strictly increase");
        if (v < (strictness == SpecStrictness::paper ? 1 : 0))
            fail("V-spec: barred exponent out of range");
        prev_u = u;
    }
    int prev_r = 1;
    for (const auto& [r, s] : spec.plain) {
        if (r < 2 || r >= spec.p) fail("V-spec: plain r must satisfy 2 <= r < p");
        if (r <= prev_r) fail("V-spec: plain r values must strictly increase");
        if (s < (strictness == SpecStrictness::paper ? 1 : 0))
            fail("V-spec: plain exponent out of range");
        prev_r = r;
    }
}

BraidWord ascending_power(int strands, int r, int s) {
    if (r < 1 || r > strands) fail("ascending_power: r out of range");
    if (s < 0) fail("ascending_power: exponent must be non-negative");
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(s) * (r - 1));
    for (int rep = 0; rep < s; ++rep)
        for (int i = 1; i < r; ++i) letters.push_back(i);
    return BraidWord(strands, std::move(letters));
}

BraidWord descending_power(int strands, int u, int v) {
    if (u < 1 || u > strands) fail("descending_power: u out of range");
    if (v < 0) fail("descending_power: exponent must be non-negative");
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(v) * (u - 1));
    for (int rep = 0; rep < v; ++rep)
        for (int i = strands - 1; i >= strands - u + 1; --i) letters.push_back(i);
    return BraidWord(strands, std::move(letters));
}

BraidWord t_link_braid(const TLinkSpec& spec) {
    validate(spec);
    const int p = spec.strands();
    BraidWord w(p, {});
    for (const auto& [r, s] : spec.pairs) w = concat(w, ascending_power(p, r, s));
    return w;
}

BraidWord v_link_braid(const VLinkSpec& spec) {
    validate(spec);
    BraidWord w(spec.p, {});
    for (const auto& [u, v] : spec.barred) w = concat(w, descending_power(spec.p, u, v));
    for (const auto& [r, s] : spec.plain) w = concat(w, ascending_power(spec.p, r, s));
    return concat(w, ascending_power(spec.p, spec.p, spec.q));
}

void validate(const FamilyParams& params) {
    if (params.a < 1 || params.b < 1 || params.c < 1)
        fail("family params: a, b, c must be positive");
    if (params.k < 0) fail("family params: k must be non-negative");
    if (std::max({params.a, params.b, params.c}) < 2)
        fail("family params: at least one of a, b, c must be greater than 1");
}

TLinkSpec satellite_family_t(const FamilyParams& params) {
    validate(params);
    const int abc = params.a + params.b + params.c;
    return TLinkSpec{{{abc, params.c}, {params.a + params.b + 2 * params.c + params.k * abc, abc}}};
}

VLinkSpec satellite_family_v(const FamilyParams& params) {
    validate(params);
    const int abc = params.a + params.b + params.c;
    VLinkSpec spec;
    spec.barred = {{abc, params.c}};
    spec.p = abc;
    spec.q = (params.k + 1) * abc + params.c;
    return spec;
}

TLinkSpec companion_t(int k) {
    if (k < 0) fail("companion_t: k must be non-negative");
    return TLinkSpec{{{3, 1}, {3 + 2 * k, 2}}};
}

TLinkSpec companion_mid_t(int k) {
    if (k < 0) fail("companion_mid_t: k must be non-negative");
    return TLinkSpec{{{3, 1}, {4 + 3 * k, 3}}};
}

VLinkSpec companion_v(int k) {
    if (k < 0) fail("companion_v: k must be non-negative");
    VLinkSpec spec;
    spec.plain = {{2, 2 * k}};
    spec.p = 3;
    spec.q = 3;
    return spec;
}

namespace {

struct LiteralPair {
    int first = 0;
    int second = 0;
    bool barred = false;
};

class LiteralParser {
public:
    explicit LiteralParser(std::string_view text) {
        for (char ch : text)
            if (!std::isspace(static_cast<unsigned char>(ch))) text_.push_back(ch);
    }

    std::vector<LiteralPair> parse(char kind) {
        expect(kind);
        expect('(');
        std::vector<LiteralPair> pairs;
        for (;;) {
            pairs.push_back(parse_pair());
            if (peek() == ',') {
                ++at_;
                continue;
            }
            break;
        }
        expect(')');
        if (at_ != text_.size()) fail("family literal: trailing characters after ')'");
        return pairs;
    }

private:
    LiteralPair parse_pair() {
        LiteralPair pair;
        expect('(');
        pair.first = parse_int();
        expect(',');
        if (peek() == '~') {
            pair.barred = true;
            ++at_;
        }
        pair.second = parse_int();
        expect(')');
        return pair;
    }

    int parse_int() {
        std::size_t end = at_;
        while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + at_, text_.data() + end, value);
        if (ec != std::errc{} || ptr != text_.data() + end || end == at_)
            fail("family literal: expected an integer at position " + std::to_string(at_ + 1));
        at_ = end;
        return value;
    }

    char peek() const { return at_ < text_.size() ? text_[at_] : '\0'; }

    void expect(char ch) {
        if (peek() != ch)
            fail(std::string("family literal: expected '") + ch + "' at position " +
                 std::to_string(at_ + 1));
        ++at_;
    }

    std::string text_;
    std::size_t at_ = 0;
};

}  // namespace

TLinkSpec parse_tlink(std::string_view text) {
    LiteralParser parser(text);
    TLinkSpec spec;
    for (const LiteralPair& pair : parser.parse('T')) {
        if (pair.barred) fail("T literal: barred exponents are not allowed");
        spec.pairs.push_back({pair.first, pair.second});
    }
    if (spec.pairs.empty()) fail("T literal: at least one pair required");
    validate(spec);
    return spec;
}

VLinkSpec parse_vlink(std::string_view text) {
    LiteralParser parser(text);
    const std::vector<LiteralPair> pairs = parser.parse('V');
    if (pairs.empty() || pairs.back().barred)
        fail("V literal: the last pair must be the plain final (p,q)");
    VLinkSpec spec;
    spec.p = pairs.back().first;
    spec.q = pairs.back().second;
    bool seen_plain = false;
    for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
        const LiteralPair& pair = pairs[i];
        if (pair.barred) {
            if (seen_plain) fail("V literal: barred pairs must precede plain pairs");
            spec.barred.push_back({pair.first, pair.second});
        } else {
            seen_plain = true;
            spec.plain.push_back({pair.first, pair.second});
        }
    }
    validate(spec);
    return spec;
}

std::string format_tlink(const TLinkSpec& spec) {
    std::string out = "T(";
    for (std::size_t i = 0; i < spec.pairs.size(); ++i) {
        if (i) out += ",";
        out += "(" + std::to_string(spec.pairs[i].r) + "," + std::to_string(spec.pairs[i].s) + ")";
    }
    return out + ")";
}

std::string format_vlink(const VLinkSpec& spec) {
    std::string out = "V(";
    for (const auto& [u, v] : spec.barred)
        out += "(" + std::to_string(u) + ",~" + std::to_string(v) + "),";
    for (const auto& [r, s] : spec.plain)
        out += "(" + std::to_string(r) + "," + std::to_string(s) + "),";
    out += "(" + std::to_string(spec.p) + "," + std::to_string(spec.q) + "))";
    return out;
}

}  // namespace braidforge
