#pragma once

// Exhaustive incidence sweeps: the largest number of points of a small
// configuration lying on one line or one conic.

#include <fatpoints/error.hpp>
#include <fatpoints/field.hpp>
#include <fatpoints/geometry.hpp>

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace fatpoints {

inline constexpr std::size_t max_incidence_points = 20;

/// Number of points on the best curve, and the indices of those points
/// (lexicographically smallest among all maximal witnesses).
struct CurveIncidence {
    std::size_t count = 0;
    std::vector<std::size_t> witness;
};

namespace detail {

inline void offer(CurveIncidence& best, std::vector<std::size_t> candidate) {
    std::sort(candidate.begin(), candidate.end());
    if (candidate.size() > best.count || (candidate.size() == best.count && candidate < best.witness)) {
        best.count = candidate.size();
        best.witness = std::move(candidate);
    }
}

/// Index sets of the distinct lines spanned by pairs of points.
inline std::vector<std::vector<std::size_t>> spanned_lines(const Configuration& x) {
    std::vector<std::vector<std::size_t>> lines;
    for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = i + 1; j < x.size(); ++j) {
            const LineForm line = line_through(x[i], x[j]);
            std::vector<std::size_t> on;
            for (std::size_t k = 0; k < x.size(); ++k) {
                if (line.contains(x[k])) on.push_back(k);
            }
            // Each line is first met through its two smallest indices.
            if (on[0] == i && on[1] == j) lines.push_back(std::move(on));
        }
    }
    return lines;
}

template <typename Ring>
std::array<typename Ring::value_type, 6> quadratic_monomials(const Ring& ring, const ProjectivePoint& p) {
    const auto x = ring.from_int(p[0]);
    const auto y = ring.from_int(p[1]);
    const auto z = ring.from_int(p[2]);
    return {ring.mul(x, x), ring.mul(x, y), ring.mul(x, z), ring.mul(y, y), ring.mul(y, z), ring.mul(z, z)};
}

/// Coefficients of the unique conic through five points, or nullopt when the
/// five points impose fewer than five conditions.
template <typename Ring>
std::optional<std::array<typename Ring::value_type, 6>> conic_through(const Ring& ring,
                                                                      const std::array<std::array<typename Ring::value_type, 6>, 5>& rows_in) {
    using V = typename Ring::value_type;
    auto rows = rows_in;
    std::array<int, 5> pivot_col{};
    std::size_t rank = 0;
    for (int c = 0; c < 6 && rank < 5; ++c) {
        std::size_t piv = rank;
        while (piv < 5 && ring.is_zero(rows[piv][static_cast<std::size_t>(c)])) ++piv;
        if (piv == 5) continue;
        std::swap(rows[piv], rows[rank]);
        const V inv = ring.inv(rows[rank][static_cast<std::size_t>(c)]);
        for (auto& v : rows[rank]) v = ring.mul(v, inv);
        for (std::size_t r = 0; r < 5; ++r) {
            if (r == rank || ring.is_zero(rows[r][static_cast<std::size_t>(c)])) continue;
            const V factor = rows[r][static_cast<std::size_t>(c)];
            for (std::size_t j = 0; j < 6; ++j) rows[r][j] = ring.sub(rows[r][j], ring.mul(factor, rows[rank][j]));
        }
        pivot_col[rank++] = c;
    }
    if (rank < 5) return std::nullopt;
    int free_col = 0;
    for (int c = 0; c < 6; ++c) {
        if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) free_col = c;
    }
    std::array<V, 6> coeffs;
    coeffs.fill(ring.zero());
    coeffs[static_cast<std::size_t>(free_col)] = ring.one();
    for (std::size_t r = 0; r < 5; ++r) {
        coeffs[static_cast<std::size_t>(pivot_col[r])] = ring.neg(rows[r][static_cast<std::size_t>(free_col)]);
    }
    return coeffs;
}

template <typename Ring>
void sweep_conics(const Ring& ring, const Configuration& x, CurveIncidence& best) {
    using V = typename Ring::value_type;
    const std::size_t n = x.size();
    std::vector<std::array<V, 6>> evals;
    evals.reserve(n);
    for (const auto& p : x.points()) evals.push_back(quadratic_monomials(ring, p));

    std::array<std::size_t, 5> idx{0, 1, 2, 3, 4};
    for (;;) {
        std::array<std::array<V, 6>, 5> rows;
        for (std::size_t k = 0; k < 5; ++k) rows[k] = evals[idx[k]];
        if (auto conic = conic_through(ring, rows)) {
            std::vector<std::size_t> on;
            for (std::size_t k = 0; k < n; ++k) {
                V acc = ring.zero();
                for (std::size_t j = 0; j < 6; ++j) acc = ring.add(acc, ring.mul((*conic)[j], evals[k][j]));
                if (ring.is_zero(acc)) on.push_back(k);
            }
            // The conic is first reached through its five smallest points.
            if (std::equal(idx.begin(), idx.end(), on.begin())) offer(best, std::move(on));
        }
        int k = 4;
        while (k >= 0 && idx[static_cast<std::size_t>(k)] == n - 5 + static_cast<std::size_t>(k)) --k;
        if (k < 0) break;
        ++idx[static_cast<std::size_t>(k)];
        for (std::size_t j = static_cast<std::size_t>(k) + 1; j < 5; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

/// Maximum number of points of `x` on a single line (degree 1) or conic
/// (degree 2). Conics come from every 5-point subset that spans a unique conic,
/// plus all line pairs assembled from the spanned lines.
inline CurveIncidence max_on_curve(const Configuration& x, int degree) {
    if (degree != 1 && degree != 2) throw Error(ErrorKind::invalid_input, "curve degree must be 1 or 2");
    if (x.size() > max_incidence_points) {
        throw Error(ErrorKind::invalid_input, "incidence sweep limited to " + std::to_string(max_incidence_points) + " points");
    }
    if (x.ambient_dim() != 2) throw Error(ErrorKind::invalid_input, "incidence sweeps are plane-only");

    CurveIncidence best;
    const std::size_t trivial = degree == 1 ? 2 : 5;
    if (x.size() <= trivial) {
        std::vector<std::size_t> all(x.size());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        detail::offer(best, std::move(all));
        return best;
    }

    const auto lines = detail::spanned_lines(x);
    if (degree == 1) {
        for (const auto& l : lines) detail::offer(best, l);
        return best;
    }

    for (std::size_t a = 0; a < lines.size(); ++a) {
        for (std::size_t b = a; b < lines.size(); ++b) {
            std::vector<std::size_t> both = lines[a];
            for (auto k : lines[b]) {
                if (std::find(both.begin(), both.end(), k) == both.end()) both.push_back(k);
            }
            detail::offer(best, std::move(both));
        }
    }
    if (x.field().is_prime()) {
        detail::sweep_conics(PrimeField(x.field()), x, best);
    } else {
        detail::sweep_conics(RationalField{}, x, best);
    }
    return best;
}

}  // namespace fatpoints
