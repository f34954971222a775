#pragma once

// Scalar fields: prime fields F_p with p < 2^63 and the rationals.

#include <fatpoints/error.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fatpoints {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

__extension__ using uint128 = unsigned __int128;

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<uint128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp != 0) {
        if (exp & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

}  // namespace detail

/// Deterministic Miller-Rabin; the first twelve prime bases are exact for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    constexpr std::array<std::uint64_t, 12> bases{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto b : bases) {
        if (n % b == 0) return n == b;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    for (auto a : bases) {
        std::uint64_t x = detail::pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

enum class FieldKind { prime_field, exact_rational };

/// Identifies the working field. Prime fields hold an odd prime below 2^63.
class FieldSpec {
public:
    static FieldSpec prime_field(std::uint64_t p) {
        if (p < 3 || p >= (std::uint64_t{1} << 63U) || !is_prime_u64(p)) {
            throw Error(ErrorKind::invalid_input, "field modulus " + std::to_string(p) + " is not an odd prime below 2^63");
        }
        return FieldSpec(FieldKind::prime_field, p);
    }

    static FieldSpec rational() { return FieldSpec(FieldKind::exact_rational, 0); }

    [[nodiscard]] FieldKind kind() const noexcept { return kind_; }
    [[nodiscard]] bool is_prime() const noexcept { return kind_ == FieldKind::prime_field; }
    [[nodiscard]] std::uint64_t prime() const {
        if (!is_prime()) throw Error(ErrorKind::unsupported_operation, "exact-rational field has no modulus");
        return prime_;
    }

    [[nodiscard]] std::string describe() const {
        return is_prime() ? "F_" + std::to_string(prime_) : std::string("Q");
    }

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

private:
    FieldSpec(FieldKind kind, std::uint64_t p) : kind_(kind), prime_(p) {}

    FieldKind kind_;
    std::uint64_t prime_;
};

inline const char* to_string(FieldKind kind) {
    return kind == FieldKind::prime_field ? "prime-field" : "exact-rational";
}

/// Session primes must be large enough that sampled configurations are generic
/// with overwhelming probability.
inline constexpr std::uint64_t min_working_prime = std::uint64_t{1} << 20U;

inline const std::vector<std::uint64_t>& default_primes() {
    static const std::vector<std::uint64_t> primes{2147483647ULL, 2147483629ULL, 2147483587ULL};
    return primes;
}

/// Checks a list of session primes: nonempty, each an odd prime >= 2^20.
inline void validate_working_primes(const std::vector<std::uint64_t>& primes) {
    if (primes.empty()) throw Error(ErrorKind::invalid_input, "prime list is empty");
    for (auto p : primes) {
        FieldSpec::prime_field(p);
        if (p < min_working_prime) {
            throw Error(ErrorKind::invalid_input, "working prime " + std::to_string(p) + " is below 2^20");
        }
    }
}

/// Arithmetic on canonical residues in [0, p).
class PrimeField {
public:
    using value_type = std::uint64_t;

    explicit PrimeField(const FieldSpec& spec) : p_(spec.prime()) {}

    [[nodiscard]] std::uint64_t modulus() const noexcept { return p_; }

    [[nodiscard]] value_type zero() const noexcept { return 0; }
    [[nodiscard]] value_type one() const noexcept { return 1; }

    [[nodiscard]] value_type from_int(std::int64_t v) const noexcept {
        auto m = static_cast<std::int64_t>(p_);
        auto r = v % m;
        return static_cast<value_type>(r < 0 ? r + m : r);
    }

    [[nodiscard]] value_type from_integer(const Integer& v) const {
        Integer r = v % p_;
        if (r < 0) r += p_;
        return static_cast<value_type>(r);
    }

    [[nodiscard]] value_type add(value_type a, value_type b) const noexcept {
        value_type s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    [[nodiscard]] value_type sub(value_type a, value_type b) const noexcept { return a >= b ? a - b : a + (p_ - b); }
    [[nodiscard]] value_type neg(value_type a) const noexcept { return a == 0 ? 0 : p_ - a; }
    [[nodiscard]] value_type mul(value_type a, value_type b) const noexcept { return detail::mul_mod(a, b, p_); }
    [[nodiscard]] value_type pow(value_type a, std::uint64_t e) const noexcept { return detail::pow_mod(a, e, p_); }

    [[nodiscard]] value_type inv(value_type a) const {
        if (a == 0) throw Error(ErrorKind::invalid_input, "inverse of zero");
        return detail::pow_mod(a, p_ - 2, p_);
    }

    [[nodiscard]] bool is_zero(value_type a) const noexcept { return a == 0; }

private:
    std::uint64_t p_;
};

/// Rational arithmetic with the same interface as PrimeField.
class RationalField {
public:
    using value_type = Rational;

    [[nodiscard]] value_type zero() const { return Rational(0); }
    [[nodiscard]] value_type one() const { return Rational(1); }
    [[nodiscard]] value_type from_int(std::int64_t v) const { return Rational(v); }
    [[nodiscard]] value_type from_integer(const Integer& v) const { return Rational(v); }
    [[nodiscard]] value_type add(const value_type& a, const value_type& b) const { return a + b; }
    [[nodiscard]] value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    [[nodiscard]] value_type neg(const value_type& a) const { return -a; }
    [[nodiscard]] value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    [[nodiscard]] value_type inv(const value_type& a) const {
        if (a == 0) throw Error(ErrorKind::invalid_input, "inverse of zero");
        return 1 / a;
    }
    [[nodiscard]] bool is_zero(const value_type& a) const { return a == 0; }
};

}  // namespace fatpoints
