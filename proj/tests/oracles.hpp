#pragma once

// Brute-force oracles. They share no code paths with the library beyond the
// Rational type: derivatives are taken symbolically, every order below the
// multiplicity is imposed (no Euler shortcut), and elimination is plain
// Gauss-Jordan over fractions.

#include <fatpoints/field.hpp>

#include <array>
#include <cstdint>
#include <algorithm>
#include <cmath>
#include <vector>

namespace oracle {

using fatpoints::Rational;

struct Term {
    Rational coeff;
    std::array<int, 3> exp;
};

inline Term differentiate(Term t, int var) {
    if (t.exp[var] == 0) return {Rational(0), t.exp};
    t.coeff *= t.exp[var];
    --t.exp[var];
    return t;
}

inline Rational evaluate(const Term& t, const std::array<std::int64_t, 3>& p) {
    Rational v = t.coeff;
    for (int i = 0; i < 3; ++i) {
        for (int e = 0; e < t.exp[i]; ++e) v *= p[i];
    }
    return v;
}

inline std::size_t rank(std::vector<std::vector<Rational>> a) {
    std::size_t rank = 0;
    const std::size_t cols = a.empty() ? 0 : a[0].size();
    for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
        std::size_t piv = rank;
        while (piv < a.size() && a[piv][c] == 0) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const Rational f = a[r][c] / a[rank][c];
            for (std::size_t j = 0; j < cols; ++j) a[r][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

/// H(t) for integer points of P^2 with multiplicities: the number of
/// independent conditions "all partials of order < m vanish at P" on
/// degree-t forms.
inline std::int64_t hilbert_value(const std::vector<std::array<std::int64_t, 3>>& points, const std::vector<int>& mult, int t) {
    std::vector<std::array<int, 3>> monos;
    for (int a = 0; a <= t; ++a) {
        for (int b = 0; a + b <= t; ++b) monos.push_back({a, b, t - a - b});
    }
    std::vector<std::vector<Rational>> rows;
    for (std::size_t k = 0; k < points.size(); ++k) {
        for (int order = 0; order < mult[k]; ++order) {
            for (int i = 0; i <= order; ++i) {
                for (int j = 0; i + j <= order; ++j) {
                    const int l = order - i - j;
                    std::vector<Rational> row;
                    for (const auto& m : monos) {
                        Term term{Rational(1), m};
                        for (int s = 0; s < i; ++s) term = differentiate(term, 0);
                        for (int s = 0; s < j; ++s) term = differentiate(term, 1);
                        for (int s = 0; s < l; ++s) term = differentiate(term, 2);
                        row.push_back(evaluate(term, points[k]));
                    }
                    rows.push_back(std::move(row));
                }
            }
        }
    }
    return static_cast<std::int64_t>(rank(std::move(rows)));
}

inline std::vector<std::int64_t> hilbert_values(const std::vector<std::array<std::int64_t, 3>>& points, const std::vector<int>& mult) {
    std::int64_t degree = 0;
    for (int m : mult) degree += m * (m + 1) / 2;
    std::vector<std::int64_t> out;
    for (int t = 0; out.empty() || out.back() != degree; ++t) out.push_back(hilbert_value(points, mult, t));
    return out;
}

/// Rank mod a small prime as the size of the largest nonvanishing minor
/// (Leibniz expansion). Only for tiny matrices.
inline std::int64_t det_mod(const std::vector<std::vector<std::int64_t>>& m, std::int64_t p) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::int64_t total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        }
        std::int64_t prod = 1;
        for (std::size_t i = 0; i < n; ++i) prod = prod * m[i][perm[i]] % p;
        total = (total + (inversions % 2 ? p - prod : prod)) % p;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

inline std::size_t rank_by_minors(const std::vector<std::vector<std::int64_t>>& m, std::int64_t p) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t k = std::min(rows, cols); k > 0; --k) {
        std::vector<bool> rsel(rows, false), csel(cols, false);
        std::fill(rsel.begin(), rsel.begin() + static_cast<std::ptrdiff_t>(k), true);
        do {
            std::fill(csel.begin(), csel.end(), false);
            std::fill(csel.begin(), csel.begin() + static_cast<std::ptrdiff_t>(k), true);
            do {
                std::vector<std::vector<std::int64_t>> sub;
                for (std::size_t r = 0; r < rows; ++r) {
                    if (!rsel[r]) continue;
                    std::vector<std::int64_t> row;
                    for (std::size_t c = 0; c < cols; ++c) {
                        if (csel[c]) row.push_back(m[r][c]);
                    }
                    sub.push_back(std::move(row));
                }
                if (det_mod(sub, p) != 0) return k;
            } while (std::prev_permutation(csel.begin(), csel.end()));
        } while (std::prev_permutation(rsel.begin(), rsel.end()));
    }
    return 0;
}

/// Maximum number of the given points of P^2(F_q) on one conic, by trying
/// every conic (every nonzero coefficient vector up to scaling).
inline std::size_t max_points_on_any_conic(const std::vector<std::array<std::int64_t, 3>>& pts, std::int64_t q) {
    std::size_t best = 0;
    std::array<std::int64_t, 6> c{};
    const auto total = static_cast<std::int64_t>(std::pow(q, 6));
    for (std::int64_t code = 1; code < total; ++code) {
        std::int64_t x = code;
        for (auto& v : c) {
            v = x % q;
            x /= q;
        }
        // one representative per projective class: first nonzero entry is 1
        std::size_t lead = 0;
        while (c[lead] == 0) ++lead;
        if (c[lead] != 1) continue;
        std::size_t on = 0;
        for (const auto& p : pts) {
            const std::int64_t v = (c[0] * p[0] % q * p[0] + c[1] * p[0] % q * p[1] + c[2] * p[0] % q * p[2] + c[3] * p[1] % q * p[1] +
                                    c[4] * p[1] % q * p[2] + c[5] * p[2] % q * p[2]) % q;
            on += v == 0;
        }
        best = std::max(best, on);
    }
    return best;
}

/// All points (equivalently, all lines) of P^2(F_q), normalized.
inline std::vector<std::array<std::int64_t, 3>> projective_plane(std::int64_t q) {
    std::vector<std::array<std::int64_t, 3>> out;
    for (std::int64_t a = 0; a < q; ++a) {
        for (std::int64_t b = 0; b < q; ++b) out.push_back({1, a, b});
    }
    for (std::int64_t b = 0; b < q; ++b) out.push_back({0, 1, b});
    out.push_back({0, 0, 1});
    return out;
}

}  // namespace oracle
