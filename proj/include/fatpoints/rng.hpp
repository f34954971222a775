#pragma once

// Seedable, portable random source. The engine is std::mt19937_64 (its output
// sequence is fixed by the C++ standard); the seed is first passed through one
// SplitMix64 step so that adjacent seeds give unrelated streams. Bounded draws
// use rejection sampling rather than std::uniform_int_distribution, whose
// algorithm is implementation-defined.

#include <fatpoints/error.hpp>
#include <fatpoints/field.hpp>

#include <cstdint>
#include <limits>
#include <random>

namespace fatpoints {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30U)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27U)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31U);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

    /// State for trial `index` of a run seeded with `seed`.
    static Rng for_trial(std::uint64_t seed, std::uint64_t index) { return Rng(seed + index); }

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next() { return engine_(); }

    /// Uniform on [0, bound). bound must be positive.
    std::uint64_t uniform_below(std::uint64_t bound) {
        if (bound == 0) throw Error(ErrorKind::invalid_input, "empty sampling range");
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
        std::uint64_t x = 0;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// Uniform element of F_p.
inline std::uint64_t random_scalar(const FieldSpec& field, Rng& rng) {
    if (!field.is_prime()) {
        throw Error(ErrorKind::unsupported_operation, "random scalars are only defined over prime fields");
    }
    return rng.uniform_below(field.prime());
}

}  // namespace fatpoints
