#include "braidforge/report.hpp"

#include "braidforge/garside.hpp"
#include "braidforge/invariants.hpp"
#include "braidforge/satellite.hpp"
#include "braidforge/version.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <set>
#include <stdexcept>

namespace braidforge {

namespace {

struct Outcome {
    std::string expected;
    std::string computed;
    bool pass = false;
};

using Params = std::vector<std::pair<std::string, long long>>;

template <typename F>
void run_check(VerificationReport& report, std::string name, Params params, F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        outcome = body();
    } catch (const std::exception& e) {
        outcome = {"no error", std::string("error: ") + e.what(), false};
    }
    const auto t1 = std::chrono::steady_clock::now();
    CheckRecord record;
    record.name = std::move(name);
    record.params = std::move(params);
    record.expected = std::move(outcome.expected);
    record.computed = std::move(outcome.computed);
    record.pass = outcome.pass;
    record.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    report.checks.push_back(std::move(record));
}

std::string multiset_string(const std::vector<long long>& values) {
    std::string out = "{";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out + "}";
}

Outcome equal_outcome(std::string expected, std::string computed) {
    const bool pass = expected == computed;
    return {std::move(expected), std::move(computed), pass};
}

VerificationReport fresh_report() {
    VerificationReport report;
    report.tool_version = std::string("braidforge ") + kVersion;
    return report;
}

// Braid in the rotated factor order (s1..s_{N-1})^{s2} (s1..s_{r1-1})^{s1};
// the order in which the strand-tracking arguments read a two-block T word.
BraidWord rotated_two_block(int strands, int r1, int s1, int s2) {
    return concat(ascending_power(strands, strands, s2), ascending_power(strands, r1, s1));
}

}  // namespace

int VerificationReport::passed() const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                          [](const CheckRecord& c) { return c.pass; }));
}

int VerificationReport::failed() const {
    return static_cast<int>(checks.size()) - passed();
}

void VerificationReport::append(VerificationReport other) {
    checks.insert(checks.end(), std::make_move_iterator(other.checks.begin()),
                  std::make_move_iterator(other.checks.end()));
}

void VerificationReport::sort_checks() {
    std::stable_sort(checks.begin(), checks.end(), [](const CheckRecord& a, const CheckRecord& b) {
        if (a.name != b.name) return a.name < b.name;
        return a.params < b.params;
    });
}

nlohmann::ordered_json VerificationReport::json() const {
    nlohmann::ordered_json out;
    out["tool_version"] = tool_version;
    out["checks"] = nlohmann::ordered_json::array();
    for (const CheckRecord& c : checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        nlohmann::ordered_json jp = nlohmann::ordered_json::object();
        for (const auto& [key, value] : c.params) jp[key] = value;
        jc["params"] = jp;
        jc["expected"] = c.expected;
        jc["computed"] = c.computed;
        jc["pass"] = c.pass;
        jc["elapsed_ms"] = c.elapsed_ms;
        out["checks"].push_back(jc);
    }
    out["summary"] = {{"pass", passed()}, {"fail", failed()}};
    return out;
}

std::string VerificationReport::text() const {
    std::string out;
    for (const CheckRecord& c : checks) {
        out += c.pass ? "[PASS] " : "[FAIL] ";
        out += c.name;
        if (!c.params.empty()) {
            out += " (";
            for (std::size_t i = 0; i < c.params.size(); ++i) {
                if (i) out += ", ";
                out += c.params[i].first + "=" + std::to_string(c.params[i].second);
            }
            out += ")";
        }
        out += ": expected " + c.expected + ", computed " + c.computed;
        out += " [" + std::to_string(c.elapsed_ms) + " ms]\n";
    }
    out += "summary: " + std::to_string(passed()) + " passed, " + std::to_string(failed()) +
           " failed\n";
    return out;
}

std::vector<FamilyParams> GridSpec::points() const {
    std::vector<FamilyParams> out;
    for (int a = 1; a <= a_max; ++a)
        for (int b = 1; b <= b_max; ++b)
            for (int c = 1; c <= c_max; ++c) {
                if (std::max({a, b, c}) < 2) continue;
                for (int k = 0; k <= k_max; ++k) out.push_back({a, b, c, k});
            }
    return out;
}

bool GridSpec::within_caps(const BraidWord& w) const {
    return w.strands() <= strand_cap && w.length() <= length_cap;
}

GridSpec parse_grid(std::string_view text) {
    GridSpec grid;
    if (text.empty() || text == "default") return grid;
    int values[4] = {};
    std::size_t at = 0;
    for (int slot = 0; slot < 4; ++slot) {
        std::size_t end = at;
        while (end < text.size() && text[end] != 'x') ++end;
        auto [ptr, ec] = std::from_chars(text.data() + at, text.data() + end, values[slot]);
        if (ec != std::errc{} || ptr != text.data() + end || values[slot] < 0)
            throw std::invalid_argument("grid spec: expected \"AxBxCxK\", got '" +
                                        std::string(text) + "'");
        if (slot < 3) {
            if (end >= text.size())
                throw std::invalid_argument("grid spec: expected four x-separated values");
            at = end + 1;
        } else if (end != text.size()) {
            throw std::invalid_argument("grid spec: trailing characters");
        }
    }
    grid.a_max = values[0];
    grid.b_max = values[1];
    grid.c_max = values[2];
    grid.k_max = values[3];
    return grid;
}

VerificationReport verify_components(int k_max) {
    VerificationReport report = fresh_report();
    for (int k = 0; k <= k_max; ++k) {
        run_check(report, "components_mid", {{"k", k}}, [k] {
            const int count = closure_components(t_link_braid(companion_mid_t(k))).count();
            return equal_outcome("3", std::to_string(count));
        });
        run_check(report, "components_base", {{"k", k}}, [k] {
            const int count = closure_components(t_link_braid(companion_t(k))).count();
            return equal_outcome("3", std::to_string(count));
        });
    }
    return report;
}

VerificationReport verify_companion_obstruction(int k_max) {
    VerificationReport report = fresh_report();
    for (int k = 0; k <= k_max; ++k) {
        const BraidWord braid = v_link_braid(companion_v(k));
        run_check(report, "companion_linking", {{"k", k}}, [&braid, k] {
            std::vector<long long> expected = {1, 1, k + 1LL};
            std::sort(expected.begin(), expected.end());
            return equal_outcome(multiset_string(expected),
                                 multiset_string(linking_matrix(braid).multiset()));
        });
        run_check(report, "companion_min_lk", {{"k", k}}, [&braid] {
            return equal_outcome("1", std::to_string(linking_matrix(braid).min_offdiag()));
        });
        // r full twists force every pairwise linking number >= r, so the
        // minimum pairwise value bounds the twists of any positive
        // representative.
        run_check(report, "companion_twist_bound", {{"k", k}}, [&braid] {
            return equal_outcome("twists <= 1",
                                 "twists <= " + std::to_string(linking_matrix(braid).min_offdiag()));
        });
        run_check(report, "companion_self_twists", {{"k", k}}, [&braid] {
            return equal_outcome("1", std::to_string(extract_full_twists(braid).k_max));
        });
        if (k <= 2) {
            run_check(report, "companion_oracle", {{"k", k}}, [&braid] {
                return equal_outcome("1", std::to_string(oracle_max_full_twists(braid)));
            });
        }
        run_check(report, "companion_tv_bundles", {{"k", k}}, [k] {
            const InvariantBundle t = invariant_bundle(t_link_braid(companion_t(k)));
            const InvariantBundle v = invariant_bundle(v_link_braid(companion_v(k)));
            return equal_outcome("match", bundles_match(t, v) ? "match" : "mismatch");
        });
    }
    return report;
}

VerificationReport verify_satellite_twists(const GridSpec& grid) {
    VerificationReport report = fresh_report();
    for (const FamilyParams& point : grid.points()) {
        const Params params = {{"a", point.a}, {"b", point.b}, {"c", point.c}, {"k", point.k}};
        run_check(report, "satellite_twists", params, [&point] {
            const int k_max = extract_full_twists(v_link_braid(satellite_family_v(point))).k_max;
            const bool pass = k_max >= point.k + 1;
            return Outcome{">= " + std::to_string(point.k + 1), std::to_string(k_max), pass};
        });
        const BraidWord t_braid = t_link_braid(satellite_family_t(point));
        if (grid.within_caps(t_braid)) {
            run_check(report, "tv_bundles", params, [&point, &t_braid] {
                const InvariantBundle t = invariant_bundle(t_braid);
                const InvariantBundle v = invariant_bundle(v_link_braid(satellite_family_v(point)));
                return equal_outcome("match", bundles_match(t, v) ? "match" : "mismatch");
            });
        }
    }
    return report;
}

VerificationReport verify_nonsplit_certificates(const GridSpec& grid, int companion_k_max) {
    VerificationReport report = fresh_report();
    const auto certify = [](const BraidWord& braid) {
        const LinkingMatrix lk = linking_matrix(braid);
        if (lk.ids.size() < 2) return equal_outcome("certified", "single component");
        return equal_outcome("certified",
                             lk.min_offdiag() >= 1 ? "certified" : "not certifiable");
    };
    for (int k = 0; k <= companion_k_max; ++k) {
        run_check(report, "nonsplit_companion", {{"k", k}},
                  [&certify, k] { return certify(v_link_braid(companion_v(k))); });
        run_check(report, "nonsplit_companion_mid", {{"k", k}},
                  [&certify, k] { return certify(t_link_braid(companion_mid_t(k))); });
        run_check(report, "nonsplit_companion_base", {{"k", k}},
                  [&certify, k] { return certify(t_link_braid(companion_t(k))); });
    }
    for (const FamilyParams& point : grid.points()) {
        run_check(report, "nonsplit_family",
                  {{"a", point.a}, {"b", point.b}, {"c", point.c}, {"k", point.k}},
                  [&certify, &point] { return certify(t_link_braid(satellite_family_t(point))); });
    }
    return report;
}

VerificationReport verify_deletion_chain() {
    VerificationReport report = fresh_report();
    const FamilyParams points[] = {{2, 1, 2, 1}, {2, 2, 2, 1}, {1, 1, 2, 1}};
    for (const FamilyParams& point : points) {
        const auto [a, b, c, k] = point;
        const int abc = a + b + c;
        const int n1 = a + b + 2 * c + k * abc;
        const BraidWord b1 = rotated_two_block(n1, abc, c, abc);

        std::set<int> family1;  // parallel components over the first two strands' partners
        for (int id = 3; id <= a + b; ++id) family1.insert(id);
        const BraidWord r1 = family1.empty() ? b1 : delete_components(b1, family1).braid;

        const int m = 2 + 2 * c + k * (2 + c);
        const TLinkSpec l2_spec{{{2 + c, c}, {m, 2 + c}}};
        const BraidWord b2 = rotated_two_block(m, 2 + c, c, 2 + c);
        const bool literal = r1 == b2;

        Params params = {{"a", a}, {"b", b}, {"c", c}, {"k", k}};
        Params params1 = params;
        params1.emplace_back("literal_word_equal", literal ? 1 : 0);
        run_check(report, "deletion_step1", params1, [&r1, &l2_spec] {
            const bool match = bundles_match(invariant_bundle(r1),
                                             invariant_bundle(t_link_braid(l2_spec)));
            return equal_outcome("match", match ? "match" : "mismatch");
        });

        run_check(report, "deletion_step2", params, [&r1, &b2, literal, c, k] {
            std::set<int> family2;
            for (int id = 4; id <= 2 + c; ++id) family2.insert(id);
            const BraidWord& base = literal ? r1 : b2;
            const BraidWord r2 = family2.empty() ? base : delete_components(base, family2).braid;
            const bool match = bundles_match(invariant_bundle(r2),
                                             invariant_bundle(t_link_braid(companion_mid_t(k))));
            return equal_outcome("match", match ? "match" : "mismatch");
        });
    }
    return report;
}

VerificationReport verify_remark() {
    VerificationReport report = fresh_report();
    run_check(report, "remark_p3_twists", {}, [] {
        const BraidWord p3(4, {1, 2, 3, 1, 2, 3, 1, 1});
        return equal_outcome("0", std::to_string(extract_full_twists(p3).k_max));
    });
    run_check(report, "remark_family_point", {}, [] {
        return equal_outcome("T((6,2),(8,6))", format_tlink(satellite_family_t({2, 2, 2, 0})));
    });
    run_check(report, "remark_v_point", {}, [] {
        return equal_outcome("V((6,~2),(6,8))", format_vlink(satellite_family_v({2, 2, 2, 0})));
    });
    run_check(report, "remark_bundle_match", {}, [] {
        const InvariantBundle t = invariant_bundle(t_link_braid(parse_tlink("T((6,2),(8,6))")));
        const InvariantBundle v = invariant_bundle(v_link_braid(parse_vlink("V((6,~2),(6,8))")));
        return equal_outcome("match", bundles_match(t, v) ? "match" : "mismatch");
    });
    return report;
}

VerificationReport verify_case2(int k_max) {
    VerificationReport report = fresh_report();
    for (int k = 1; k <= k_max; ++k) {
        const BraidWord companion = v_link_braid(companion_v(k));
        run_check(report, "case2_match", {{"k", k}}, [&companion, k] {
            const Case2Match match = match_case2_form(companion);
            const std::string expected = "matched, a=3, wheel >= " + std::to_string(2 * (k - 1));
            if (!match.matched) return Outcome{expected, "not matched", false};
            const std::string computed = "matched, a=" + std::to_string(match.a) +
                                         ", wheel = " + std::to_string(match.wheel_power);
            const bool pass = match.a == 3 && match.wheel_power >= 2 * (k - 1);
            return Outcome{expected, computed, pass};
        });
        run_check(report, "case2_paper_split", {{"k", k}}, [&companion, k] {
            const Case2Match match = match_case2_form(companion, k);
            const std::string expected =
                "matched, b0 = sigma_1^2, wheel = " + std::to_string(2 * (k - 1));
            if (!match.matched) return Outcome{expected, "not matched", false};
            const bool b0_ok = positive_equal(match.b0, BraidWord(3, {1, 1}));
            const std::string computed = std::string("matched, b0 = ") + format_braid(match.b0) +
                                         ", wheel = " + std::to_string(match.wheel_power);
            return Outcome{expected, computed, b0_ok && match.wheel_power == 2 * (k - 1)};
        });
        run_check(report, "case2_axis", {{"k", k}}, [&companion, k] {
            const BraidWord pattern(2, std::vector<int>(2 * k + 2, 1));
            const bool equal = positive_equal(adjoin_axis(pattern), companion);
            return equal_outcome("positive_equal", equal ? "positive_equal" : "different");
        });
    }
    return report;
}

VerificationReport verify_all(int k_max, const GridSpec& grid) {
    VerificationReport report = fresh_report();
    report.append(verify_components(k_max));
    report.append(verify_companion_obstruction(k_max));
    report.append(verify_satellite_twists(grid));
    report.append(verify_nonsplit_certificates(grid, k_max));
    report.append(verify_deletion_chain());
    report.append(verify_remark());
    report.append(verify_case2(std::max(1, k_max)));
    report.sort_checks();
    return report;
}

}  // namespace braidforge
