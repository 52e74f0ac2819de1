#pragma once

#include "braidforge/families.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Verification pipelines over the built-in link families, emitting
// machine-readable reports with deterministic ordering and exit semantics.

namespace braidforge {

struct CheckRecord {
    std::string name;
    std::vector<std::pair<std::string, long long>> params;
    std::string expected;
    std::string computed;
    bool pass = false;
    long long elapsed_ms = 0;
};

struct VerificationReport {
    std::string tool_version;
    std::vector<CheckRecord> checks;

    int passed() const;
    int failed() const;
    bool all_pass() const { return failed() == 0; }
    void append(VerificationReport other);
    void sort_checks();  // by name, then params

    nlohmann::ordered_json json() const;
    std::string text() const;
};

// Family grid: a in 1..a_max, b in 1..b_max, c in 1..c_max, k in 0..k_max,
// restricted to max(a,b,c) >= 2. Bundle comparisons additionally observe the
// strand/length caps on the T side.
struct GridSpec {
    int a_max = 3;
    int b_max = 3;
    int c_max = 3;
    int k_max = 3;
    int strand_cap = 12;
    int length_cap = 600;

    std::vector<FamilyParams> points() const;
    bool within_caps(const BraidWord& w) const;
};

GridSpec parse_grid(std::string_view text);  // "AxBxCxK" or "default"

VerificationReport verify_components(int k_max);
VerificationReport verify_companion_obstruction(int k_max);
VerificationReport verify_satellite_twists(const GridSpec& grid);
VerificationReport verify_nonsplit_certificates(const GridSpec& grid, int companion_k_max);
VerificationReport verify_deletion_chain();
VerificationReport verify_remark();
VerificationReport verify_case2(int k_max);

VerificationReport verify_all(int k_max = 5, const GridSpec& grid = {});

}  // namespace braidforge
