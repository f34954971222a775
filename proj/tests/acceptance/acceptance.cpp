// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <fatpoints/fatpoints.hpp>

#include "../oracles.hpp"
#include "../property_checks.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace fatpoints;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

struct Criterion {
    int number;
    std::string name;
    double limit_seconds;
    std::function<Outcome()> run;
};

std::vector<std::uint64_t> range(std::uint64_t n) {
    std::vector<std::uint64_t> v;
    for (std::uint64_t i = 0; i < n; ++i) v.push_back(i);
    return v;
}

std::string brief(const VerificationReport& r) {
    std::string s = r.statement_id + " " + std::to_string(r.passes) + "/" + std::to_string(r.trials);
    if (!r.failures.empty()) {
        const auto& f = r.failures.front();
        s += "; first failure trial " + std::to_string(f.trial_index) + " [" + f.label + "] observed " + f.observed + ", expected " + f.expected;
    }
    return s;
}

std::int64_t counter(const VerificationReport& r, const std::string& key) {
    const auto it = r.counters.find(key);
    return it == r.counters.end() ? 0 : it->second;
}

Outcome golden_table() {
    const std::vector<std::int64_t> dh{1, 2, 3, 4, 5, 6, 5, 5, 1, 1, 0};
    const auto table = h2c51_table();
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto c = hilbert_function_multi([seed](const FieldSpec& f) { return double_points(build_c_dr(5, 1, f, seed)); }, default_primes());
        if (!(c.hf == table) || difference_function(c.hf).values != dh || c.hf(100) != 33) {
            return {false, "seed " + std::to_string(seed) + ": " + to_string(c.hf)};
        }
    }
    return {true, "10 seeds x 3 primes: 1 3 6 10 15 21 26 31 32 33 / dH 1 2 3 4 5 6 5 5 1 1 0"};
}

Outcome theorem_formula() {
    std::string detail;
    for (int d = 3; d <= 7; ++d) {
        const auto r = verify_theorem_1_1(d, range(10));
        if (!r.passed()) return {false, "d = " + std::to_string(d) + ": " + brief(r)};
        detail += "d=" + std::to_string(d) + " 10/10 ";
    }
    return {true, detail};
}

Outcome generic_support() {
    std::size_t checked = 0;
    for (int d = 2; d <= 6; ++d) {
        for (auto p : default_primes()) {
            for (std::uint64_t seed = 0; seed < 5; ++seed) {
                const auto x = build_c_d(d, FieldSpec::prime_field(p), seed);
                if (!check_generic_membership(x) || !(hilbert_function(simple_points(x)) == generic_hf_table(static_cast<std::int64_t>(x.size())))) {
                    return {false, "C_" + std::to_string(d) + " seed " + std::to_string(seed) + " over F_" + std::to_string(p)};
                }
                ++checked;
            }
        }
        std::vector<int> rs;
        for (int r = 0; r <= d; ++r) rs.push_back(r);
        const auto rep = verify_cdr_generic(d, rs, range(5));
        if (!rep.passed()) return {false, brief(rep)};
        checked += rep.trials * rep.primes_used.size();
    }
    return {true, std::to_string(checked) + " configurations (C_d, C_{d,r}, d <= 6, all r) generic"};
}

Outcome first_half() {
    std::string detail;
    for (int d = 3; d <= 6; ++d) {
        const auto r = verify_first_half(d, 200, 1000 * static_cast<std::uint64_t>(d));
        if (!r.passed() || !r.failures.empty()) return {false, "d = " + std::to_string(d) + ": " + brief(r)};
        detail += "d=" + std::to_string(d) + " " + std::to_string(r.passes) + "/" + std::to_string(r.trials) + " ";
    }
    return {true, detail + "(each run includes C_{d,1})"};
}

Outcome minimality() {
    const auto r = verify_s11_minimality(1000, 42, true);
    if (!r.passed() || !r.failures.empty()) return {false, brief(r)};
    return {true, brief(r) + "; H(6) = 26/27/28 on " + std::to_string(counter(r, "h6_eq_26")) + "/" + std::to_string(counter(r, "h6_eq_27")) +
                      "/" + std::to_string(counter(r, "h6_eq_28")) + " (sample, prime) pairs; H(9) = 33 throughout"};
}

Outcome eq1() {
    const auto r = verify_eq1_identity(12);
    return {r.passed(), brief(r) + " partitions"};
}

Outcome ah_cap() {
    // deficit value fixed by brute force over Q before any library rank is taken
    const std::int64_t frozen = oracle::hilbert_value({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {1, 2, 3}}, {2, 2, 2, 2, 2}, 4);
    if (frozen != 14) return {false, "oracle deficit value " + std::to_string(frozen)};

    const auto r11 = verify_ah_achieved(11, 500, 7);
    if (!r11.passed() || r11.pass_rate() < 0.99) return {false, brief(r11)};
    const auto r5 = verify_ah_achieved(5, 100, 7);
    const auto all = static_cast<std::int64_t>(r5.trials * r5.primes_used.size());
    if (!r5.passed() || counter(r5, "observed_h4_eq_14") != all) return {false, brief(r5)};
    return {true, "s=11 cap met in " + std::to_string(r11.passes) + "/500; s=5 H(4) = " + std::to_string(frozen) +
                      " < 15 in 100/100 (the deficit sits at t = 4; H(2) = 6 meets the cap)"};
}

Outcome oracle_equivalence() {
    Rng rng(31337);
    for (int k = 0; k < 100; ++k) {
        const auto z = fixtures::small_integer_scheme(rng);
        const auto v = properties::check_oracle_equivalence(z, default_primes(), true);
        if (!v.empty()) return {false, "case " + std::to_string(k) + ": " + v.front()};
    }
    return {true, "100 schemes: Q, 3 primes and brute force agree"};
}

Outcome property_suite() {
    Rng rng(4242);
    const auto field = FieldSpec::prime_field(default_primes().front());
    std::size_t violations = 0;
    std::string first;
    for (int k = 0; k < 200; ++k) {
        const auto z = properties::random_scheme(field, rng);
        const auto v = properties::check_all(z, rng, 50);
        if (!v.empty() && first.empty()) first = "case " + std::to_string(k) + ": " + v.front();
        violations += v.size();
    }
    if (violations != 0) return {false, std::to_string(violations) + " violations; " + first};
    return {true, "200 cases, 50 coordinate changes each, 0 violations"};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "golden table 2C_{5,1}", 1.0, golden_table},
        {2, "doubled C_d matches the closed form, d = 3..7", 10.0, theorem_formula},
        {3, "C_d and C_{d,r} have generic Hilbert functions", 10.0, generic_support},
        {4, "first half: H_{2X}(t) = C(t+2,2) for t <= d", 60.0, first_half},
        {5, "eleven double points dominate 2C_{5,1}", 120.0, minimality},
        {6, "partition identity, d <= 12", 1.0, eq1},
        {7, "double-point cap for s = 11, deficit for s = 5", 600.0, ah_cap},
        {8, "exact and modular Hilbert functions agree", 30.0, oracle_equivalence},
        {9, "property suite", 600.0, property_suite},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.limit_seconds;
        const bool ok = o.ok && in_time;
        failed += !ok;
        std::printf("[%s] %d %s (%.2f s, limit %.0f s)%s: %s\n", ok ? "PASS" : "FAIL", c.number, c.name.c_str(), secs, c.limit_seconds,
                    in_time ? "" : " TIME LIMIT EXCEEDED", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%s\n", failed == 0 ? "ALL CRITERIA PASS" : (std::to_string(failed) + " CRITERIA FAIL").c_str());
    return failed == 0 ? 0 : 1;
}
