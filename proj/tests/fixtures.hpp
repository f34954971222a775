#pragma once

// Shared fixtures: integer line arrangements over Q and small random integer
// schemes.

#include <fatpoints/arrangements.hpp>
#include <fatpoints/hilbert.hpp>

#include <array>
#include <vector>

namespace fixtures {

using namespace fatpoints;

/// Lines [i : i^2 : 1], i = 1..d. Their duals lie on a smooth conic, so no
/// three of them are concurrent.
inline LineArrangement rational_arrangement(int d) {
    std::vector<LineForm> lines;
    for (std::int64_t i = 1; i <= d; ++i) lines.emplace_back(std::array<std::int64_t, 3>{i, i * i, 1}, FieldSpec::rational());
    return arrangement_from_lines(std::move(lines));
}

inline Configuration rational_c_d(int d) {
    auto a = rational_arrangement(d);
    return Configuration(std::move(a.points), FieldSpec::rational());
}

/// C_{d,r} keeping the points of L_{d+1} with partners L_1..L_r.
inline Configuration rational_c_dr(int d, int r) {
    const auto a = rational_arrangement(d + 1);
    std::vector<ProjectivePoint> pts;
    for (std::size_t k = 0; k < a.points.size(); ++k) {
        if (a.partners[k].second == d && a.partners[k].first >= r) continue;
        pts.push_back(a.points[k]);
    }
    return Configuration(std::move(pts), FieldSpec::rational());
}

inline std::vector<std::array<std::int64_t, 3>> triples(const Configuration& x) {
    std::vector<std::array<std::int64_t, 3>> out;
    for (const auto& p : x.points()) out.push_back({p[0], p[1], p[2]});
    return out;
}

/// Up to `max_points` distinct integer points with coordinates in {0..9} and
/// multiplicities in {1, 2}.
inline FatPointScheme small_integer_scheme(Rng& rng, std::size_t max_points = 4) {
    const auto q = FieldSpec::rational();
    const std::size_t n = 1 + rng.uniform_below(max_points);
    std::vector<ProjectivePoint> pts;
    while (pts.size() < n) {
        std::array<std::int64_t, 3> c{};
        for (auto& v : c) v = static_cast<std::int64_t>(rng.uniform_below(10));
        if (c == std::array<std::int64_t, 3>{0, 0, 0}) continue;
        ProjectivePoint p({c[0], c[1], c[2]}, q);
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(std::move(p));
    }
    std::vector<int> mult;
    for (std::size_t i = 0; i < n; ++i) mult.push_back(1 + static_cast<int>(rng.uniform_below(2)));
    return FatPointScheme(Configuration(std::move(pts), q), std::move(mult));
}

}  // namespace fixtures
