#pragma once

// Fat-point schemes and their Hilbert functions.
//
// H_Z(t) is the number of independent conditions Z imposes on forms of degree
// t, i.e. the rank of the conditions matrix: one column per degree-t monomial,
// one row per (point, derivative operator) pair, entry = operator applied to
// the monomial and evaluated at the point.
//
// A point of multiplicity m contributes the C(k + n, n) partial-derivative
// operators of order k = min(m - 1, t). For t >= m - 1 and p > t, Euler's
// relation makes the order-(m - 1) partials imply vanishing of every lower
// order, so each point contributes exactly its degree C(m - 1 + n, n) rows.
// For t < m - 1 the order-t partials determine a degree-t form completely,
// matching the fact that no nonzero form of degree < m is singular enough.

#include <fatpoints/error.hpp>
#include <fatpoints/field.hpp>
#include <fatpoints/geometry.hpp>
#include <fatpoints/matrix.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace fatpoints {

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

/// Points with positive multiplicities in P^n.
class FatPointScheme {
public:
    FatPointScheme(Configuration support, std::vector<int> multiplicities)
        : support_(std::move(support)), multiplicities_(std::move(multiplicities)) {
        if (multiplicities_.size() != support_.size()) {
            throw Error(ErrorKind::invalid_input, "points and multiplicities differ in length");
        }
        for (int m : multiplicities_) {
            if (m < 1) throw Error(ErrorKind::invalid_input, "multiplicities must be positive");
        }
    }

    [[nodiscard]] const Configuration& support() const noexcept { return support_; }
    [[nodiscard]] const std::vector<int>& multiplicities() const noexcept { return multiplicities_; }
    [[nodiscard]] const FieldSpec& field() const noexcept { return support_.field(); }
    [[nodiscard]] std::size_t ambient_dim() const noexcept { return support_.ambient_dim(); }
    [[nodiscard]] std::size_t size() const noexcept { return support_.size(); }
    [[nodiscard]] bool empty() const noexcept { return support_.empty(); }

    /// Sum of C(m_i + n - 1, n).
    [[nodiscard]] std::int64_t degree() const {
        const auto n = static_cast<std::int64_t>(ambient_dim());
        std::int64_t deg = 0;
        for (int m : multiplicities_) deg += binomial(m + n - 1, n);
        return deg;
    }

private:
    Configuration support_;
    std::vector<int> multiplicities_;
};

inline FatPointScheme with_multiplicity(const Configuration& x, int m) {
    return FatPointScheme(x, std::vector<int>(x.size(), m));
}

/// 2X: every point doubled.
inline FatPointScheme double_points(const Configuration& x) { return with_multiplicity(x, 2); }

inline FatPointScheme simple_points(const Configuration& x) { return with_multiplicity(x, 1); }

/// Exponent vectors of degree `degree` in `vars` variables, graded-lex with
/// x_0 > x_1 > ... (descending lexicographic order of exponent vectors).
inline std::vector<std::vector<int>> monomials(std::size_t vars, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(vars, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i + 1 == vars) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            cur[i] = e;
            rec(i + 1, left - e);
        }
    };
    if (vars == 0) return out;
    rec(0, degree);
    return out;
}

/// Which derivative orders each point contributes. `include_lower_orders`
/// adds every order below the top one (used to check that the top order alone
/// suffices).
struct ConditionsOptions {
    bool include_lower_orders = false;
};

/// Builds the conditions matrix over the field described by `Ring`
/// (PrimeField or RationalField).
template <typename Ring>
DenseMatrix<typename Ring::value_type> build_conditions_matrix(const Ring& ring, const FatPointScheme& z, int t,
                                                                ConditionsOptions opts = {}) {
    using V = typename Ring::value_type;
    if (z.empty()) throw Error(ErrorKind::invalid_input, "conditions matrix of an empty scheme");
    if (t < 0) throw Error(ErrorKind::invalid_input, "negative degree");
    if (z.field().is_prime() && z.field().prime() <= static_cast<std::uint64_t>(t)) {
        throw Error(ErrorKind::characteristic_guard,
                    "characteristic " + std::to_string(z.field().prime()) + " does not exceed degree " + std::to_string(t));
    }

    const std::size_t vars = z.ambient_dim() + 1;
    const auto cols = monomials(vars, t);

    std::vector<std::vector<V>> rows;
    std::vector<V> row(cols.size());
    for (std::size_t k = 0; k < z.size(); ++k) {
        const auto& point = z.support()[k].coords();

        // powers[i][e] = x_i^e at the point
        std::vector<std::vector<V>> powers(vars, std::vector<V>(static_cast<std::size_t>(t) + 1));
        for (std::size_t i = 0; i < vars; ++i) {
            const V x = ring.from_int(point[i]);
            powers[i][0] = ring.one();
            for (int e = 1; e <= t; ++e) powers[i][static_cast<std::size_t>(e)] = ring.mul(powers[i][static_cast<std::size_t>(e - 1)], x);
        }

        const int top = std::min(z.multiplicities()[k] - 1, t);
        const int lowest = opts.include_lower_orders ? 0 : top;
        for (int order = top; order >= lowest; --order) {
            for (const auto& op : monomials(vars, order)) {
                for (std::size_t c = 0; c < cols.size(); ++c) {
                    const auto& mono = cols[c];
                    V value = ring.one();
                    for (std::size_t i = 0; i < vars && !ring.is_zero(value); ++i) {
                        if (mono[i] < op[i]) {
                            value = ring.zero();
                            break;
                        }
                        for (int f = 0; f < op[i]; ++f) value = ring.mul(value, ring.from_int(mono[i] - f));
                        value = ring.mul(value, powers[i][static_cast<std::size_t>(mono[i] - op[i])]);
                    }
                    row[c] = value;
                }
                rows.push_back(row);
            }
        }
    }
    if constexpr (std::is_same_v<Ring, PrimeField>) {
        return DenseMatrix<V>::from_rows(rows, z.field());
    } else {
        return DenseMatrix<V>::from_rows(rows, FieldSpec::rational());
    }
}

inline ModMatrix conditions_matrix(const FatPointScheme& z, int t, ConditionsOptions opts = {}) {
    if (!z.field().is_prime()) throw Error(ErrorKind::invalid_input, "conditions_matrix needs a prime field; use conditions_matrix_exact");
    return build_conditions_matrix(PrimeField(z.field()), z, t, opts);
}

inline RationalMatrix conditions_matrix_exact(const FatPointScheme& z, int t, ConditionsOptions opts = {}) {
    if (z.field().is_prime()) throw Error(ErrorKind::invalid_input, "conditions_matrix_exact needs integer points over Q");
    return build_conditions_matrix(RationalField{}, z, t, opts);
}

/// Rank of the degree-t conditions matrix over the scheme's own field.
inline std::int64_t conditions_rank(const FatPointScheme& z, int t, ConditionsOptions opts = {}) {
    if (z.field().is_prime()) return static_cast<std::int64_t>(rank_modp(conditions_matrix(z, t, opts)));
    return static_cast<std::int64_t>(rank_exact(conditions_matrix_exact(z, t, opts)));
}

/// H(0..T) where T is the least t with H(t) = degree; constant afterwards.
class HilbertFunction {
public:
    HilbertFunction(std::vector<std::int64_t> values, std::int64_t degree) : values_(std::move(values)), degree_(degree) {
        if (values_.empty() || values_.back() != degree_) {
            throw Error(ErrorKind::invariant_violation, "Hilbert function does not end at its degree");
        }
        for (std::size_t t = 1; t < values_.size(); ++t) {
            if (values_[t] < values_[t - 1]) throw Error(ErrorKind::invariant_violation, "Hilbert function decreases");
        }
        if (std::find(values_.begin(), values_.end() - 1, degree_) != values_.end() - 1) {
            throw Error(ErrorKind::invariant_violation, "stabilization index is not the first t reaching the degree");
        }
    }

    [[nodiscard]] const std::vector<std::int64_t>& values() const noexcept { return values_; }
    [[nodiscard]] std::int64_t degree() const noexcept { return degree_; }
    [[nodiscard]] int stabilization_index() const noexcept { return static_cast<int>(values_.size()) - 1; }

    /// H(t) with the constant extension past stabilization.
    [[nodiscard]] std::int64_t operator()(int t) const {
        if (t < 0) return 0;
        return static_cast<std::size_t>(t) < values_.size() ? values_[static_cast<std::size_t>(t)] : degree_;
    }

    friend bool operator==(const HilbertFunction&, const HilbertFunction&) = default;

private:
    std::vector<std::int64_t> values_;
    std::int64_t degree_;
};

inline std::string to_string(const HilbertFunction& h) {
    std::string s;
    for (auto v : h.values()) {
        if (!s.empty()) s += ' ';
        s += std::to_string(v);
    }
    return s;
}

/// H(0..min(t_max, T)). Stops early once the degree is reached.
inline std::vector<std::int64_t> hilbert_values(const FatPointScheme& z, int t_max) {
    if (z.empty()) throw Error(ErrorKind::invalid_input, "Hilbert function of an empty scheme");
    const std::int64_t degree = z.degree();
    const auto n = static_cast<std::int64_t>(z.ambient_dim());
    std::vector<std::int64_t> values;
    for (int t = 0; t <= t_max; ++t) {
        const std::int64_t h = conditions_rank(z, t);
        if (h > binomial(t + n, n) || (!values.empty() && h < values.back())) {
            throw Error(ErrorKind::invariant_violation, "rank sequence violates the Hilbert function shape at t = " + std::to_string(t));
        }
        values.push_back(h);
        if (h == degree) break;
    }
    return values;
}

/// Full Hilbert function through stabilization over the scheme's field.
inline HilbertFunction hilbert_function(const FatPointScheme& z) {
    const std::int64_t degree = z.degree();
    auto values = hilbert_values(z, static_cast<int>(degree));
    if (values.back() != degree) {
        throw Error(ErrorKind::field_artifact, "Hilbert function failed to reach degree " + std::to_string(degree) + " by t = " +
                                                   std::to_string(degree) + " over " + z.field().describe());
    }
    return HilbertFunction(std::move(values), degree);
}

/// ΔH(t) = H(t) - H(t-1), through the first zero past stabilization.
struct DifferenceFunction {
    std::vector<std::int64_t> values;

    friend bool operator==(const DifferenceFunction&, const DifferenceFunction&) = default;
};

inline DifferenceFunction difference_function(const HilbertFunction& h) {
    DifferenceFunction d;
    const int T = h.stabilization_index();
    for (int t = 0; t <= T + 1; ++t) d.values.push_back(h(t) - h(t - 1));
    return d;
}

inline std::string to_string(const DifferenceFunction& d) {
    std::string s;
    for (auto v : d.values) {
        if (!s.empty()) s += ' ';
        s += std::to_string(v);
    }
    return s;
}

/// Hilbert function of s general points of the plane: min(s, C(t+2, 2)).
inline std::int64_t generic_hf(std::int64_t s, int t) { return std::min(s, binomial(t + 2, 2)); }

inline HilbertFunction generic_hf_table(std::int64_t s) {
    std::vector<std::int64_t> v;
    for (int t = 0; v.empty() || v.back() != s; ++t) v.push_back(generic_hf(s, t));
    return HilbertFunction(std::move(v), s);
}

/// Upper bound for s double points in the plane: min(C(t+2, 2), 3s).
inline std::int64_t ah_upper_bound(std::int64_t s, int t) { return std::min(binomial(t + 2, 2), 3 * s); }

inline HilbertFunction ah_upper_bound_table(std::int64_t s) {
    std::vector<std::int64_t> v;
    for (int t = 0; v.empty() || v.back() != 3 * s; ++t) v.push_back(ah_upper_bound(s, t));
    return HilbertFunction(std::move(v), 3 * s);
}

/// Hilbert function of the double points at the intersections of d general lines.
inline std::int64_t theorem1_formula(std::int64_t d, int t) {
    if (t <= d - 1) return binomial(t + 2, 2);
    if (t <= 2 * d - 3) return binomial(d + 1, 2) + (t + 1 - d) * d;
    return 3 * binomial(d, 2);
}

inline HilbertFunction theorem1_table(std::int64_t d) {
    const std::int64_t degree = 3 * binomial(d, 2);
    std::vector<std::int64_t> v;
    for (int t = 0; v.empty() || v.back() != degree; ++t) v.push_back(theorem1_formula(d, t));
    return HilbertFunction(std::move(v), degree);
}

/// Hilbert function of 2C_{5,1}, the conjectured minimum for 11 double points
/// with general support.
inline HilbertFunction h2c51_table() { return HilbertFunction({1, 3, 6, 10, 15, 21, 26, 31, 32, 33}, 33); }

/// True iff h1(t) >= h2(t) for every t.
inline bool dominates(const HilbertFunction& h1, const HilbertFunction& h2) {
    const int T = std::max(h1.stabilization_index(), h2.stabilization_index());
    for (int t = 0; t <= T; ++t) {
        if (h1(t) < h2(t)) return false;
    }
    return true;
}

/// Thrown when the primes of a multi-prime computation disagree.
class FieldArtifactError : public Error {
public:
    using PerPrime = std::vector<std::pair<std::uint64_t, std::vector<std::int64_t>>>;

    FieldArtifactError(const std::string& what, PerPrime per_prime)
        : Error(ErrorKind::field_artifact, what), per_prime_(std::move(per_prime)) {}

    [[nodiscard]] const PerPrime& per_prime() const noexcept { return per_prime_; }

private:
    PerPrime per_prime_;
};

/// Hilbert function certified over several primes. `build` produces the
/// scheme over a given prime field; all primes must agree.
struct CertifiedHilbertFunction {
    HilbertFunction hf;
    std::vector<std::uint64_t> primes_used;
};

inline CertifiedHilbertFunction hilbert_function_multi(const std::function<FatPointScheme(const FieldSpec&)>& build,
                                                       const std::vector<std::uint64_t>& primes) {
    if (primes.empty()) throw Error(ErrorKind::invalid_input, "no primes given");
    FieldArtifactError::PerPrime per_prime;
    std::optional<HilbertFunction> first;
    bool agree = true;
    for (auto p : primes) {
        auto hf = hilbert_function(build(FieldSpec::prime_field(p)));
        per_prime.emplace_back(p, hf.values());
        if (!first) {
            first = hf;
        } else if (!(*first == hf)) {
            agree = false;
        }
    }
    if (!agree) throw FieldArtifactError("primes disagree on the Hilbert function", std::move(per_prime));
    return {*first, primes};
}

/// Reduces an integer-coordinate configuration over Q modulo p.
inline Configuration reduce_mod(const Configuration& x, const FieldSpec& field) {
    if (x.field().is_prime()) throw Error(ErrorKind::invalid_input, "reduce_mod expects an integer configuration over Q");
    std::vector<ProjectivePoint> points;
    points.reserve(x.size());
    try {
        for (const auto& p : x.points()) points.emplace_back(p.coords(), field);
        return Configuration(std::move(points), field, x.provenance(), x.seed());
    } catch (const Error& e) {
        throw Error(ErrorKind::field_artifact, "configuration degenerates modulo " + std::to_string(field.prime()) + " (" + e.what() + ")");
    }
}

inline FatPointScheme reduce_mod(const FatPointScheme& z, const FieldSpec& field) {
    return FatPointScheme(reduce_mod(z.support(), field), z.multiplicities());
}

}  // namespace fatpoints
