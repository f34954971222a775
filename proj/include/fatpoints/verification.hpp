#pragma once

// Statement checks. Each statement is a Plan: a fixed list of independent
// trials, each fully determined by (statement id, params, trial index, primes),
// so any trial can be replayed in isolation. Randomized trials draw from
// Rng::for_trial(seed, index) and are repeated over every configured prime;
// a trial passes only if it passes over all of them.

#include <fatpoints/arrangements.hpp>
#include <fatpoints/config_io.hpp>
#include <fatpoints/error.hpp>
#include <fatpoints/field.hpp>
#include <fatpoints/geometry.hpp>
#include <fatpoints/hilbert.hpp>
#include <fatpoints/rng.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace fatpoints {

inline constexpr const char* certificate_caveat =
    "randomized certificate: ranks computed over prime fields near 2^31 (plus exact rational cross-checks at small scale); "
    "evidence for, not a proof of, the characteristic-0 statement";

/// Pass-rate thresholds for every statement.
struct Thresholds {
    static constexpr double theorem = 1.0;           // statements the paper proves
    static constexpr double almost_every = 0.99;     // "almost every configuration" statements
    static constexpr int redraw_budget = 1000;       // sub-generic redraws allowed per trial
};

struct VerifyOptions {
    std::vector<std::uint64_t> primes = default_primes();
    unsigned threads = 0;  // 0: one per hardware thread
};

struct TrialFailure {
    std::size_t trial_index = 0;
    std::uint64_t seed = 0;
    std::uint64_t prime = 0;  // 0 when no field is involved
    std::string label;
    Json configuration;       // configuration file object, null when not applicable
    std::string observed;
    std::string expected;
};

struct TrialRecord {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    std::string label;
    bool passed = false;
    std::string summary;
};

struct TrialOutcome {
    TrialRecord record;
    std::optional<TrialFailure> failure;
    std::map<std::string, std::int64_t> counters;
};

struct VerificationReport {
    std::string statement_id;
    Json params = Json::object();
    std::size_t trials = 0;
    std::size_t passes = 0;
    std::vector<TrialFailure> failures;
    std::vector<TrialRecord> records;
    std::vector<std::uint64_t> primes_used;
    std::map<std::string, std::int64_t> counters;
    double required_pass_rate = Thresholds::theorem;
    double runtime_seconds = 0.0;

    [[nodiscard]] double pass_rate() const { return trials == 0 ? 0.0 : static_cast<double>(passes) / static_cast<double>(trials); }

    /// Theorem-backed statements need every trial to pass; statistical ones
    /// need the pass rate to reach their threshold.
    [[nodiscard]] bool passed() const {
        if (trials == 0) return false;
        if (required_pass_rate >= 1.0) return failures.empty();
        return pass_rate() >= required_pass_rate;
    }
};

struct Plan {
    std::string statement_id;
    Json params;
    std::size_t trial_count = 0;
    double required_pass_rate = Thresholds::theorem;
    bool uses_primes = true;
    std::function<TrialOutcome(std::size_t index, const std::vector<std::uint64_t>& primes)> run_trial;
};

namespace detail {

template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace detail

inline VerificationReport execute(const Plan& plan, const VerifyOptions& opts = {}) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<TrialOutcome> outcomes(plan.trial_count);
    detail::parallel_for(plan.trial_count, opts.threads, [&](std::size_t i) {
        try {
            outcomes[i] = plan.run_trial(i, opts.primes);
        } catch (const std::exception& e) {
            TrialOutcome o;
            o.record = {i, 0, "error", false, e.what()};
            o.failure = TrialFailure{i, 0, 0, "error", nullptr, e.what(), "no error"};
            outcomes[i] = std::move(o);
        }
    });

    VerificationReport report;
    report.statement_id = plan.statement_id;
    report.params = plan.params;
    report.trials = plan.trial_count;
    report.required_pass_rate = plan.required_pass_rate;
    if (plan.uses_primes) report.primes_used = opts.primes;
    for (auto& o : outcomes) {
        if (o.record.passed) ++report.passes;
        if (o.failure) report.failures.push_back(std::move(*o.failure));
        for (const auto& [k, v] : o.counters) report.counters[k] += v;
        report.records.push_back(std::move(o.record));
    }
    report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

// ---------------------------------------------------------------------------
// Shared trial machinery

/// True iff the simple points of `x` have the generic Hilbert function.
inline bool check_generic_membership(const Configuration& x) {
    return hilbert_function(simple_points(x)) == generic_hf_table(static_cast<std::int64_t>(x.size()));
}

namespace detail {

using Draw = std::function<Configuration(const FieldSpec&, Rng&)>;

/// Draws until the configuration has the generic Hilbert function.
inline Configuration draw_generic(const Draw& draw, const FieldSpec& field, Rng& rng, std::int64_t& redraws) {
    for (int attempt = 0; attempt <= Thresholds::redraw_budget; ++attempt) {
        std::optional<Configuration> x;
        try {
            x = draw(field, rng);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::invalid_input && e.kind() != ErrorKind::degenerate_input) throw;
        }
        if (x && check_generic_membership(*x)) return *x;
        ++redraws;
    }
    throw Error(ErrorKind::genericity_failure, "no configuration with generic Hilbert function within the redraw budget");
}

inline Configuration concat(std::vector<ProjectivePoint> a, const std::vector<ProjectivePoint>& b, const FieldSpec& field, int s) {
    a.insert(a.end(), b.begin(), b.end());
    return Configuration(std::move(a), field, Provenance{ProvenanceKind::random, 0, 0, s}, std::nullopt);
}

inline std::vector<ProjectivePoint> random_points(int s, const FieldSpec& field, Rng& rng) {
    std::vector<ProjectivePoint> out;
    for (int i = 0; i < s; ++i) out.push_back(random_point(field, rng));
    return out;
}

/// `count` points on a random line.
inline std::vector<ProjectivePoint> points_on_random_line(int count, const FieldSpec& field, Rng& rng) {
    const PrimeField f(field);
    const auto p = random_point(field, rng);
    const auto q = random_point(field, rng);
    std::vector<ProjectivePoint> out;
    for (int i = 0; i < count; ++i) {
        const auto a = random_scalar(field, rng);
        const auto b = random_scalar(field, rng);
        std::vector<std::int64_t> c(3);
        for (std::size_t k = 0; k < 3; ++k) {
            c[k] = static_cast<std::int64_t>(f.add(f.mul(a, f.from_int(p[k])), f.mul(b, f.from_int(q[k]))));
        }
        out.emplace_back(c, field);
    }
    return out;
}

/// `count` points on a random smooth conic: the image of {[1 : u : u^2]} under
/// a random coordinate change.
inline std::vector<ProjectivePoint> points_on_random_conic(int count, const FieldSpec& field, Rng& rng) {
    const PrimeField f(field);
    const auto m = random_coordinate_change(field, rng);
    std::vector<ProjectivePoint> out;
    for (int i = 0; i < count; ++i) {
        const auto u = random_scalar(field, rng);
        const std::vector<std::int64_t> c{1, static_cast<std::int64_t>(u), static_cast<std::int64_t>(f.mul(u, u))};
        out.push_back(transform(m, ProjectivePoint(c, field)));
    }
    return out;
}

inline std::string join(const std::vector<std::int64_t>& v) {
    std::string s;
    for (auto x : v) {
        if (!s.empty()) s += ' ';
        s += std::to_string(x);
    }
    return s;
}

inline TrialOutcome pass(std::size_t index, std::uint64_t seed, std::string label, std::string summary) {
    TrialOutcome o;
    o.record = {index, seed, std::move(label), true, std::move(summary)};
    return o;
}

inline TrialOutcome fail(std::size_t index, std::uint64_t seed, std::string label, std::uint64_t prime, Json configuration,
                         std::string observed, std::string expected) {
    TrialOutcome o;
    o.record = {index, seed, label, false, "observed " + observed + "; expected " + expected};
    o.failure = TrialFailure{index, seed, prime, std::move(label), std::move(configuration), std::move(observed), std::move(expected)};
    return o;
}

inline Json config_json(const Configuration& x, int multiplicity) { return scheme_to_json(with_multiplicity(x, multiplicity)); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Intersections of d general lines: generic support and the closed-form
// Hilbert function of the doubled configuration.

inline Plan plan_theorem_1_1(int d, std::vector<std::uint64_t> seeds) {
    if (d < 2) throw Error(ErrorKind::invalid_input, "d must be at least 2");
    Plan plan;
    plan.statement_id = "thm-1.1";
    plan.params = {{"d", d}, {"seeds", seeds}};
    plan.trial_count = seeds.size();
    plan.run_trial = [d, seeds](std::size_t i, const std::vector<std::uint64_t>& primes) {
        const auto seed = seeds[i];
        const auto expected = theorem1_table(d);
        std::string summary;
        for (auto p : primes) {
            const auto field = FieldSpec::prime_field(p);
            const auto x = build_c_d(d, field, seed);
            if (!check_generic_membership(x)) {
                return detail::fail(i, seed, "c_d", p, detail::config_json(x, 1), "H_X = " + to_string(hilbert_function(simple_points(x))),
                                    "generic " + to_string(generic_hf_table(static_cast<std::int64_t>(x.size()))));
            }
            const auto h = hilbert_function(double_points(x));
            if (!(h == expected)) {
                return detail::fail(i, seed, "c_d", p, detail::config_json(x, 2), to_string(h), to_string(expected));
            }
            summary = to_string(h);
        }
        return detail::pass(i, seed, "c_d", summary);
    };
    return plan;
}

inline VerificationReport verify_theorem_1_1(int d, std::vector<std::uint64_t> seeds, const VerifyOptions& opts = {}) {
    return execute(plan_theorem_1_1(d, std::move(seeds)), opts);
}

// ---------------------------------------------------------------------------
// s = C(d,2) + 1 points with generic support: 2X imposes independent
// conditions in every degree t <= d.

inline Plan plan_first_half(int d, std::size_t trials, std::uint64_t seed) {
    if (d < 3) throw Error(ErrorKind::invalid_input, "d must be at least 3");
    Plan plan;
    plan.statement_id = "prop-2.2";
    plan.params = {{"d", d}, {"trials", trials}, {"seed", seed}};
    plan.trial_count = trials + 1;  // the last trial runs on C_{d,1}
    plan.run_trial = [d, trials, seed](std::size_t i, const std::vector<std::uint64_t>& primes) {
        const int s = static_cast<int>(binomial(d, 2)) + 1;
        const bool structured = i == trials;
        const std::string label = structured ? "c_d1" : "random";
        const std::uint64_t trial_seed = seed + i;
        TrialOutcome out;
        std::int64_t redraws = 0;
        std::string summary;
        for (auto p : primes) {
            const auto field = FieldSpec::prime_field(p);
            std::optional<Configuration> x;
            if (structured) {
                x = build_c_dr(d, 1, field, trial_seed);
                if (!check_generic_membership(*x)) {
                    return detail::fail(i, trial_seed, label, p, detail::config_json(*x, 1), "non-generic support", "generic support");
                }
            } else {
                Rng rng = Rng::for_trial(seed, i);
                x = detail::draw_generic([s](const FieldSpec& f, Rng& r) { return sample_random_points(s, f, r); }, field, rng, redraws);
            }
            const auto values = hilbert_values(double_points(*x), d);
            std::vector<std::int64_t> observed, expected;
            for (int t = 0; t <= d; ++t) {
                observed.push_back(static_cast<std::size_t>(t) < values.size() ? values[static_cast<std::size_t>(t)] : 3 * s);
                expected.push_back(binomial(t + 2, 2));
            }
            if (observed != expected) {
                return detail::fail(i, trial_seed, label, p, detail::config_json(*x, 2), detail::join(observed), detail::join(expected));
            }
            summary = "H(" + std::to_string(d) + ") = " + std::to_string(observed.back());
        }
        out = detail::pass(i, trial_seed, label, summary);
        out.counters["redraws"] = redraws;
        return out;
    };
    return plan;
}

inline VerificationReport verify_first_half(int d, std::size_t trials, std::uint64_t seed, const VerifyOptions& opts = {}) {
    return execute(plan_first_half(d, trials, seed), opts);
}

// ---------------------------------------------------------------------------
// Eleven double points with generic support: H_{2X} >= H_{2C_{5,1}}, plus the
// degree-6/7 implications and the stabilization bound on every sample.

inline const std::vector<std::string>& s11_adversarial_families() {
    static const std::vector<std::string> families{"collinear5", "conic8", "line-groups", "c5-plus-point", "c51-alt-removal"};
    return families;
}

/// Lower bounds for 6..9 double points with generic support, checked on the
/// first a points of every sample whose support is generic.
inline const std::map<int, std::vector<std::int64_t>>& small_double_point_floors() {
    static const std::map<int, std::vector<std::int64_t>> floors{
        {6, {1, 3, 6, 10, 14, 18}},
        {7, {1, 3, 6, 10, 15, 19}},
        {8, {1, 3, 6, 10, 15, 20}},
        {9, {1, 3, 6, 10, 15, 20, 24, 27}},
    };
    return floors;
}

namespace detail {

inline Configuration draw_s11_family(const std::string& family, const FieldSpec& field, Rng& rng) {
    if (family == "random") return sample_random_points(11, field, rng);
    if (family == "collinear5") return concat(points_on_random_line(5, field, rng), random_points(6, field, rng), field, 11);
    if (family == "conic8") return concat(points_on_random_conic(8, field, rng), random_points(3, field, rng), field, 11);
    if (family == "line-groups") {
        const auto lines = sample_general_lines(7, field, rng).lines;
        auto four = arrangement_from_lines({lines.begin(), lines.begin() + 4}).points;
        auto three = arrangement_from_lines({lines.begin() + 4, lines.end()}).points;
        four.insert(four.end(), three.begin(), three.end());
        return concat(std::move(four), random_points(2, field, rng), field, 11);
    }
    if (family == "c5-plus-point") {
        const auto lines = sample_general_lines(5, field, rng).lines;
        return concat(arrangement_from_lines(lines).points, random_points(1, field, rng), field, 11);
    }
    if (family == "c51-alt-removal") {
        const int kept = static_cast<int>(rng.uniform_below(5));
        return build_c_dr(5, 1, field, rng.next(), std::vector<int>{kept});
    }
    if (family == "c51") return build_c_dr(5, 1, field, rng.seed());
    throw Error(ErrorKind::invalid_input, "unknown s11 family '" + family + "'");
}

}  // namespace detail

inline Plan plan_s11_minimality(std::size_t trials, std::uint64_t seed, bool adversarial, std::size_t adversarial_trials = 50) {
    std::vector<std::string> labels(trials, "random");
    if (adversarial) {
        for (const auto& fam : s11_adversarial_families()) labels.insert(labels.end(), adversarial_trials, fam);
    }
    labels.emplace_back("c51");

    Plan plan;
    plan.statement_id = "s11-minimality";
    plan.params = {{"trials", trials}, {"seed", seed}, {"adversarial", adversarial}, {"adversarial_trials", adversarial ? adversarial_trials : 0}};
    plan.trial_count = labels.size();
    plan.run_trial = [labels, seed](std::size_t i, const std::vector<std::uint64_t>& primes) {
        const std::string& label = labels[i];
        const std::uint64_t trial_seed = seed + i;
        const auto table = h2c51_table();
        TrialOutcome out;
        std::int64_t redraws = 0;
        std::map<std::string, std::int64_t> counters;
        std::string summary;
        for (auto p : primes) {
            const auto field = FieldSpec::prime_field(p);
            Rng rng = Rng::for_trial(seed, i);
            const Configuration x = label == "c51"
                                        ? build_c_dr(5, 1, field, trial_seed)
                                        : detail::draw_generic([&label](const FieldSpec& f, Rng& r) { return detail::draw_s11_family(label, f, r); },
                                                               field, rng, redraws);
            if (label == "c51" && !check_generic_membership(x)) {
                return detail::fail(i, trial_seed, label, p, detail::config_json(x, 1), "non-generic support", "generic support");
            }
            const auto h = hilbert_function(double_points(x));
            const auto payload = [&] { return detail::config_json(x, 2); };

            if (!dominates(h, table)) return detail::fail(i, trial_seed, label, p, payload(), to_string(h), ">= " + to_string(table));
            if (h(6) < 26 || h(6) > 28) {
                return detail::fail(i, trial_seed, label, p, payload(), "H(6) = " + std::to_string(h(6)), "26 <= H(6) <= 28");
            }
            if (h(7) < 31) return detail::fail(i, trial_seed, label, p, payload(), "H(7) = " + std::to_string(h(7)), "H(7) >= 31 given H(6) in {26,27,28}");
            if (h(9) != 33) return detail::fail(i, trial_seed, label, p, payload(), "H(9) = " + std::to_string(h(9)), "H(9) = 33");
            if (label == "c51" && !(h == table)) return detail::fail(i, trial_seed, label, p, payload(), to_string(h), to_string(table));
            ++counters["h6_eq_" + std::to_string(h(6))];

            for (const auto& [a, floor] : small_double_point_floors()) {
                std::vector<ProjectivePoint> sub(x.points().begin(), x.points().begin() + a);
                const Configuration z(std::move(sub), field);
                if (!check_generic_membership(z)) continue;
                ++counters["floor_checked_" + std::to_string(a)];
                const auto hz = hilbert_values(double_points(z), static_cast<int>(floor.size()) - 1);
                for (std::size_t t = 0; t < floor.size(); ++t) {
                    const std::int64_t v = t < hz.size() ? hz[t] : hz.back();
                    if (v < floor[t]) {
                        return detail::fail(i, trial_seed, label + "/first-" + std::to_string(a), p, detail::config_json(z, 2),
                                            detail::join(hz), ">= " + detail::join(floor));
                    }
                }
            }
            summary = to_string(h);
        }
        out = detail::pass(i, trial_seed, label, summary);
        out.counters = std::move(counters);
        out.counters["redraws"] = redraws;
        out.counters["family_" + label] = 1;
        return out;
    };
    return plan;
}

inline VerificationReport verify_s11_minimality(std::size_t trials, std::uint64_t seed, bool adversarial, const VerifyOptions& opts = {},
                                                std::size_t adversarial_trials = 50) {
    return execute(plan_s11_minimality(trials, seed, adversarial, adversarial_trials), opts);
}

// ---------------------------------------------------------------------------
// Singular-point count identity for products of r >= 2 reduced curves:
// sum C(l_i - 1, 2) + sum_{i<j} l_i l_j = C(d - 1, 2) + r - 1.

/// Partitions of d into at least two parts, parts non-increasing.
inline std::vector<std::vector<int>> partitions_with_two_or_more_parts(int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            if (cur.size() >= 2) out.push_back(cur);
            return;
        }
        for (int part = std::min(left, cap); part >= 1; --part) {
            cur.push_back(part);
            rec(left - part, part);
            cur.pop_back();
        }
    };
    rec(d, d);
    return out;
}

inline Plan plan_eq1_identity(int d_max) {
    if (d_max < 2) throw Error(ErrorKind::invalid_input, "d_max must be at least 2");
    std::vector<std::vector<int>> all;
    for (int d = 2; d <= d_max; ++d) {
        auto parts = partitions_with_two_or_more_parts(d);
        all.insert(all.end(), parts.begin(), parts.end());
    }
    Plan plan;
    plan.statement_id = "eq-1";
    plan.params = {{"d_max", d_max}};
    plan.trial_count = all.size();
    plan.uses_primes = false;
    plan.run_trial = [all](std::size_t i, const std::vector<std::uint64_t>&) {
        const auto& lambda = all[i];
        std::int64_t d = 0;
        std::int64_t D = 0;
        for (std::size_t a = 0; a < lambda.size(); ++a) {
            d += lambda[a];
            D += binomial(lambda[a] - 1, 2);
            for (std::size_t b = a + 1; b < lambda.size(); ++b) D += static_cast<std::int64_t>(lambda[a]) * lambda[b];
        }
        const std::int64_t expected = binomial(d - 1, 2) + static_cast<std::int64_t>(lambda.size()) - 1;
        std::vector<std::int64_t> parts(lambda.begin(), lambda.end());
        const std::string label = "(" + detail::join(parts) + ")";
        if (D != expected) return detail::fail(i, 0, label, 0, nullptr, "D = " + std::to_string(D), std::to_string(expected));
        return detail::pass(i, 0, label, "D = " + std::to_string(D));
    };
    return plan;
}

inline VerificationReport verify_eq1_identity(int d_max) { return execute(plan_eq1_identity(d_max), {{}, 1}); }

// ---------------------------------------------------------------------------
// Upper bound min(C(t+2,2), 3s) for s general double points: met for almost
// every generic support when s is not 2 or 5; for s = 2 and s = 5 a deficit is
// expected in degree 2 (the doubled line) and 4 (the doubled conic).

inline std::optional<int> ah_exceptional_degree(std::int64_t s) {
    if (s == 2) return 2;
    if (s == 5) return 4;
    return std::nullopt;
}

inline Plan plan_ah_achieved(int s, std::size_t trials, std::uint64_t seed) {
    if (s < 1) throw Error(ErrorKind::invalid_input, "s must be positive");
    const auto exceptional = ah_exceptional_degree(s);
    Plan plan;
    plan.statement_id = "ah-achieved";
    plan.params = {{"s", s}, {"trials", trials}, {"seed", seed}};
    plan.trial_count = trials;
    plan.required_pass_rate = exceptional ? Thresholds::theorem : Thresholds::almost_every;
    plan.run_trial = [s, seed, exceptional](std::size_t i, const std::vector<std::uint64_t>& primes) {
        const std::uint64_t trial_seed = seed + i;
        const auto cap = ah_upper_bound_table(s);
        std::int64_t redraws = 0;
        std::map<std::string, std::int64_t> counters;
        std::string summary;
        for (auto p : primes) {
            const auto field = FieldSpec::prime_field(p);
            Rng rng = Rng::for_trial(seed, i);
            const auto x = detail::draw_generic([s](const FieldSpec& f, Rng& r) { return sample_random_points(s, f, r); }, field, rng, redraws);
            const auto h = hilbert_function(double_points(x));
            if (exceptional) {
                const int t = *exceptional;
                ++counters["observed_h" + std::to_string(t) + "_eq_" + std::to_string(h(t))];
                if (h(t) >= cap(t)) {
                    return detail::fail(i, trial_seed, "exceptional", p, detail::config_json(x, 2), "H(" + std::to_string(t) + ") = " + std::to_string(h(t)),
                                        "< " + std::to_string(cap(t)));
                }
                summary = "deficit at t = " + std::to_string(t) + ": " + std::to_string(h(t)) + " < " + std::to_string(cap(t));
            } else {
                if (!(h == cap)) return detail::fail(i, trial_seed, "random", p, detail::config_json(x, 2), to_string(h), to_string(cap));
                summary = to_string(h);
            }
        }
        auto out = detail::pass(i, trial_seed, exceptional ? "exceptional" : "random", summary);
        out.counters = std::move(counters);
        out.counters["redraws"] = redraws;
        return out;
    };
    return plan;
}

inline VerificationReport verify_ah_achieved(int s, std::size_t trials, std::uint64_t seed, const VerifyOptions& opts = {}) {
    return execute(plan_ah_achieved(s, trials, seed), opts);
}

// ---------------------------------------------------------------------------
// C_{d,r} has the Hilbert function of C(d,2) + r general points, whichever
// points of the last line are removed.

inline Plan plan_cdr_generic(int d, std::vector<int> r_values, std::vector<std::uint64_t> seeds) {
    for (int r : r_values) {
        if (r < 0 || r > d) throw Error(ErrorKind::invalid_input, "r must lie in [0, d]");
    }
    std::vector<std::pair<int, std::uint64_t>> cases;
    for (int r : r_values) {
        for (auto s : seeds) cases.emplace_back(r, s);
    }
    Plan plan;
    plan.statement_id = "cdr-generic";
    plan.params = {{"d", d}, {"r_values", r_values}, {"seeds", seeds}};
    plan.trial_count = cases.size();
    plan.run_trial = [d, cases](std::size_t i, const std::vector<std::uint64_t>& primes) {
        const auto [r, seed] = cases[i];
        const std::string label = "r=" + std::to_string(r);
        std::vector<int> alternative;
        for (int k = d - r; k < d; ++k) alternative.push_back(k);
        std::string summary;
        for (auto p : primes) {
            const auto field = FieldSpec::prime_field(p);
            const auto x = build_c_dr(d, r, field, seed);
            const auto h = hilbert_function(simple_points(x));
            const auto expected = generic_hf_table(static_cast<std::int64_t>(x.size()));
            if (!(h == expected)) return detail::fail(i, seed, label, p, detail::config_json(x, 1), to_string(h), to_string(expected));
            const auto y = build_c_dr(d, r, field, seed, alternative);
            const auto hy = hilbert_function(simple_points(y));
            if (!(hy == h)) {
                return detail::fail(i, seed, label + "/alt-removal", p, detail::config_json(y, 1), to_string(hy), to_string(h));
            }
            const auto h2 = hilbert_function(double_points(x));
            const auto h2y = hilbert_function(double_points(y));
            if (!(h2 == h2y)) {
                return detail::fail(i, seed, label + "/alt-removal-doubled", p, detail::config_json(y, 2), to_string(h2y), to_string(h2));
            }
            summary = to_string(h);
        }
        return detail::pass(i, seed, label, summary);
    };
    return plan;
}

inline VerificationReport verify_cdr_generic(int d, std::vector<int> r_values, std::vector<std::uint64_t> seeds, const VerifyOptions& opts = {}) {
    return execute(plan_cdr_generic(d, std::move(r_values), std::move(seeds)), opts);
}

// ---------------------------------------------------------------------------
// Replay

/// Rebuilds the plan that produced a report from its statement id and params.
inline Plan plan_from(const std::string& statement_id, const Json& params) {
    if (statement_id == "thm-1.1") return plan_theorem_1_1(params.at("d").get<int>(), params.at("seeds").get<std::vector<std::uint64_t>>());
    if (statement_id == "prop-2.2") {
        return plan_first_half(params.at("d").get<int>(), params.at("trials").get<std::size_t>(), params.at("seed").get<std::uint64_t>());
    }
    if (statement_id == "s11-minimality") {
        return plan_s11_minimality(params.at("trials").get<std::size_t>(), params.at("seed").get<std::uint64_t>(),
                                   params.at("adversarial").get<bool>(), params.at("adversarial_trials").get<std::size_t>());
    }
    if (statement_id == "eq-1") return plan_eq1_identity(params.at("d_max").get<int>());
    if (statement_id == "ah-achieved") {
        return plan_ah_achieved(params.at("s").get<int>(), params.at("trials").get<std::size_t>(), params.at("seed").get<std::uint64_t>());
    }
    if (statement_id == "cdr-generic") {
        return plan_cdr_generic(params.at("d").get<int>(), params.at("r_values").get<std::vector<int>>(),
                                params.at("seeds").get<std::vector<std::uint64_t>>());
    }
    throw Error(ErrorKind::invalid_input, "unknown statement '" + statement_id + "'");
}

/// Re-runs one trial of a report in isolation.
inline TrialOutcome replay(const VerificationReport& report, std::size_t trial_index) {
    const Plan plan = plan_from(report.statement_id, report.params);
    if (trial_index >= plan.trial_count) throw Error(ErrorKind::invalid_input, "trial index out of range");
    return plan.run_trial(trial_index, report.primes_used);
}

}  // namespace fatpoints
