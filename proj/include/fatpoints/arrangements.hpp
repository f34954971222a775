#pragma once

// Random points, general line arrangements, and the line configurations C_d
// and C_{d,r} built from them.

#include <fatpoints/error.hpp>
#include <fatpoints/field.hpp>
#include <fatpoints/geometry.hpp>
#include <fatpoints/rng.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

namespace fatpoints {

inline constexpr int default_resample_budget = 1000;

/// d lines with pairwise distinct intersection points, plus the number of
/// rejected batches it took to find them.
struct GeneralLines {
    std::vector<LineForm> lines;
    int resamples = 0;
};

namespace detail {

inline ProjectivePoint random_point(const FieldSpec& field, Rng& rng, std::size_t ambient_dim = 2) {
    std::vector<std::int64_t> c(ambient_dim + 1);
    for (;;) {
        bool nonzero = false;
        for (auto& x : c) {
            x = static_cast<std::int64_t>(random_scalar(field, rng));
            nonzero = nonzero || x != 0;
        }
        if (nonzero) return ProjectivePoint(c, field);
    }
}

inline LineForm random_line(const FieldSpec& field, Rng& rng) { return LineForm(random_point(field, rng)); }

/// True iff the lines are pairwise distinct and no three are concurrent.
inline bool in_general_position(const std::vector<LineForm>& lines) {
    std::set<std::vector<std::int64_t>> seen;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        for (std::size_t j = i + 1; j < lines.size(); ++j) {
            if (lines[i] == lines[j]) return false;
            if (!seen.insert(intersect(lines[i], lines[j]).coords()).second) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Rejection-samples whole batches of d random lines until they are in
/// general position (distinct, no three concurrent).
inline GeneralLines sample_general_lines(int d, const FieldSpec& field, Rng& rng, int budget = default_resample_budget) {
    if (d < 2) throw Error(ErrorKind::invalid_input, "need at least two lines");
    if (!field.is_prime()) throw Error(ErrorKind::unsupported_operation, "line sampling needs a prime field");
    GeneralLines out;
    for (int attempt = 0; attempt <= budget; ++attempt) {
        std::vector<LineForm> lines;
        lines.reserve(static_cast<std::size_t>(d));
        for (int i = 0; i < d; ++i) lines.push_back(detail::random_line(field, rng));
        if (detail::in_general_position(lines)) {
            out.lines = std::move(lines);
            out.resamples = attempt;
            return out;
        }
    }
    throw Error(ErrorKind::genericity_failure, "no general arrangement of " + std::to_string(d) + " lines found over " +
                                                   field.describe() + " within " + std::to_string(budget) + " resamples");
}

inline GeneralLines sample_general_lines(int d, const FieldSpec& field, std::uint64_t seed, int budget = default_resample_budget) {
    Rng rng(seed);
    return sample_general_lines(d, field, rng, budget);
}

/// A line arrangement with its pairwise intersection points. Point k is the
/// intersection of lines partners[k].first < partners[k].second, listed in
/// lexicographic order of the pairs.
struct LineArrangement {
    std::vector<LineForm> lines;
    std::vector<ProjectivePoint> points;
    std::vector<std::pair<int, int>> partners;
    int resamples = 0;
};

inline LineArrangement arrangement_from_lines(std::vector<LineForm> lines) {
    LineArrangement a;
    a.lines = std::move(lines);
    const int d = static_cast<int>(a.lines.size());
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            a.points.push_back(intersect(a.lines[static_cast<std::size_t>(i)], a.lines[static_cast<std::size_t>(j)]));
            a.partners.emplace_back(i, j);
        }
    }
    return a;
}

inline LineArrangement general_arrangement(int d, const FieldSpec& field, std::uint64_t seed) {
    auto sampled = sample_general_lines(d, field, seed);
    auto a = arrangement_from_lines(std::move(sampled.lines));
    a.resamples = sampled.resamples;
    return a;
}

/// The C(d,2) pairwise intersection points of d general lines.
inline Configuration build_c_d(int d, const FieldSpec& field, std::uint64_t seed) {
    auto a = general_arrangement(d, field, seed);
    return Configuration(std::move(a.points), field, Provenance{ProvenanceKind::c_d, d, 0, 0}, seed);
}

/// C_{d,r}: C_{d+1} with d - r of the points on the last line removed.
/// The last line L_{d+1} meets L_1..L_d; by default the points kept on it are
/// those with partners L_1..L_r (the highest partner indices are removed).
/// `kept_partners` (0-based indices into L_1..L_d) selects a different subset.
inline Configuration build_c_dr(int d, int r, const FieldSpec& field, std::uint64_t seed,
                                std::optional<std::vector<int>> kept_partners = std::nullopt) {
    if (d < 1 || r < 0 || r > d) throw Error(ErrorKind::invalid_input, "C_{d,r} needs 0 <= r <= d");
    std::vector<bool> keep(static_cast<std::size_t>(d), false);
    if (kept_partners) {
        if (static_cast<int>(kept_partners->size()) != r) throw Error(ErrorKind::invalid_input, "kept partner list must have r entries");
        for (int i : *kept_partners) {
            if (i < 0 || i >= d || keep[static_cast<std::size_t>(i)]) throw Error(ErrorKind::invalid_input, "bad kept partner index");
            keep[static_cast<std::size_t>(i)] = true;
        }
    } else {
        for (int i = 0; i < r; ++i) keep[static_cast<std::size_t>(i)] = true;
    }

    auto a = general_arrangement(d + 1, field, seed);
    std::vector<ProjectivePoint> points;
    for (std::size_t k = 0; k < a.points.size(); ++k) {
        const auto [i, j] = a.partners[k];
        if (j == d && !keep[static_cast<std::size_t>(i)]) continue;
        points.push_back(a.points[k]);
    }
    return Configuration(std::move(points), field, Provenance{ProvenanceKind::c_dr, d, r, 0}, seed);
}

/// s distinct uniformly drawn points of P^n.
inline Configuration sample_random_points(int s, const FieldSpec& field, Rng& rng, std::size_t ambient_dim = 2,
                                          int budget = default_resample_budget) {
    if (s < 1) throw Error(ErrorKind::invalid_input, "need at least one point");
    if (!field.is_prime()) throw Error(ErrorKind::unsupported_operation, "point sampling needs a prime field");
    std::vector<ProjectivePoint> points;
    int collisions = 0;
    while (static_cast<int>(points.size()) < s) {
        auto p = detail::random_point(field, rng, ambient_dim);
        if (std::find(points.begin(), points.end(), p) != points.end()) {
            if (++collisions > budget) throw Error(ErrorKind::genericity_failure, "too many point collisions over " + field.describe());
            continue;
        }
        points.push_back(std::move(p));
    }
    return Configuration(std::move(points), field, Provenance{ProvenanceKind::random, 0, 0, s}, rng.seed());
}

inline Configuration sample_random_points(int s, const FieldSpec& field, std::uint64_t seed) {
    Rng rng(seed);
    return sample_random_points(s, field, rng);
}

/// Random invertible 3x3 matrix over F_p, row-major.
inline std::array<std::uint64_t, 9> random_coordinate_change(const FieldSpec& field, Rng& rng) {
    const PrimeField f(field);
    for (;;) {
        std::array<std::uint64_t, 9> m{};
        for (auto& x : m) x = random_scalar(field, rng);
        auto minor = [&](int a, int b, int c, int e) { return f.sub(f.mul(m[a], m[e]), f.mul(m[b], m[c])); };
        std::uint64_t det = f.mul(m[0], minor(4, 5, 7, 8));
        det = f.sub(det, f.mul(m[1], minor(3, 5, 6, 8)));
        det = f.add(det, f.mul(m[2], minor(3, 4, 6, 7)));
        if (det != 0) return m;
    }
}

inline ProjectivePoint transform(const std::array<std::uint64_t, 9>& m, const ProjectivePoint& p) {
    const PrimeField f(p.field());
    std::vector<std::int64_t> out(3);
    for (std::size_t i = 0; i < 3; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < 3; ++j) acc = f.add(acc, f.mul(m[3 * i + j], f.from_int(p[j])));
        out[i] = static_cast<std::int64_t>(acc);
    }
    return ProjectivePoint(out, p.field());
}

inline Configuration transform(const std::array<std::uint64_t, 9>& m, const Configuration& x) {
    std::vector<ProjectivePoint> points;
    points.reserve(x.size());
    for (const auto& p : x.points()) points.push_back(transform(m, p));
    return Configuration(std::move(points), x.field(), x.provenance(), x.seed());
}

}  // namespace fatpoints
