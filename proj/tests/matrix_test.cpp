#include <fatpoints/geometry.hpp>
#include <fatpoints/hilbert.hpp>
#include <fatpoints/matrix.hpp>
#include <fatpoints/rng.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace fatpoints;

namespace {

const FieldSpec F7 = FieldSpec::prime_field(7);
const FieldSpec F101 = FieldSpec::prime_field(101);

std::vector<std::vector<std::int64_t>> random_small(Rng& rng, std::size_t& rows, std::size_t& cols, std::uint64_t bound) {
    rows = 1 + rng.uniform_below(8);
    cols = 1 + rng.uniform_below(8);
    std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
    for (auto& row : a) {
        for (auto& v : row) v = static_cast<std::int64_t>(rng.uniform_below(bound));
    }
    return a;
}

ModMatrix to_mod(const std::vector<std::vector<std::int64_t>>& a, const FieldSpec& f) {
    std::vector<std::vector<std::uint64_t>> rows;
    for (const auto& row : a) rows.emplace_back(row.begin(), row.end());
    return ModMatrix::from_rows(rows, f);
}

RationalMatrix to_rational(const std::vector<std::vector<std::int64_t>>& a) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& row : a) rows.emplace_back(row.begin(), row.end());
    return RationalMatrix::from_rows(rows, FieldSpec::rational());
}

}  // namespace

TEST(RankModp, Examples) {
    EXPECT_EQ(rank_modp(ModMatrix::identity(3, F101)), 3U);
    EXPECT_EQ(rank_modp(ModMatrix::from_rows({{1, 2, 3}, {2, 4, 6}}, F7)), 1U);
    EXPECT_EQ(rank_modp(ModMatrix(4, 4, F101)), 0U);
}

TEST(RankModp, RejectsOutOfRangeEntries) {
    EXPECT_THROW((void)rank_modp(ModMatrix::from_rows({{7, 1}}, F7)), Error);
    EXPECT_THROW((void)rank_modp(ModMatrix::from_rows({{1, 1}}, FieldSpec::rational())), Error);
}

TEST(RankModp, DoesNotModifyInput) {
    const auto m = ModMatrix::from_rows({{1, 2}, {3, 4}}, F7);
    const auto copy = m;
    (void)rank_modp(m);
    EXPECT_EQ(m, copy);
}

TEST(RankExact, Examples) {
    EXPECT_EQ(rank_exact(RationalMatrix::from_rows({{Rational(1, 2), Rational(1)}, {Rational(1), Rational(2)}}, FieldSpec::rational())), 1U);
    EXPECT_EQ(rank_exact(RationalMatrix::identity(5, FieldSpec::rational())), 5U);
    EXPECT_EQ(rank_exact(RationalMatrix(3, 2, FieldSpec::rational())), 0U);
}

TEST(RankExact, OneDoublePointDegreeOne) {
    const auto q = FieldSpec::rational();
    const Configuration x({ProjectivePoint({0, 0, 1}, q)}, q);
    const auto m = conditions_matrix_exact(double_points(x), 1);
    ASSERT_EQ(m.rows(), 3U);
    ASSERT_EQ(m.cols(), 3U);
    EXPECT_EQ(rank_exact(m), 3U);
}

TEST(RankModp, MatchesMinorEnumeration) {
    Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 0, c = 0;
        auto a = random_small(rng, r, c, 7);
        a.resize(std::min<std::size_t>(r, 5));
        for (auto& row : a) row.resize(std::min<std::size_t>(c, 5));
        // force some dependence
        if (a.size() > 2) {
            for (std::size_t j = 0; j < a[0].size(); ++j) a[2][j] = (a[0][j] + 3 * a[1][j]) % 7;
        }
        EXPECT_EQ(rank_modp(to_mod(a, F7)), oracle::rank_by_minors(a, 7)) << "trial " << trial;
    }
}

TEST(RankExact, MatchesModularRankOnSmallIntegerMatrices) {
    Rng rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t r = 0, c = 0;
        auto a = random_small(rng, r, c, 10);
        if (r > 3 && trial % 2 == 0) {
            for (std::size_t j = 0; j < c; ++j) a[r - 1][j] = a[0][j] + 2 * a[1][j] - a[2][j];
        }
        const auto exact = rank_exact(to_rational(a));
        for (auto p : default_primes()) {
            auto reduced = a;
            for (auto& row : reduced) {
                for (auto& v : row) v = ((v % static_cast<std::int64_t>(p)) + static_cast<std::int64_t>(p)) % static_cast<std::int64_t>(p);
            }
            EXPECT_EQ(rank_modp(to_mod(reduced, FieldSpec::prime_field(p))), exact) << "trial " << trial;
        }
        std::vector<std::vector<Rational>> rows;
        for (const auto& row : a) rows.emplace_back(row.begin(), row.end());
        EXPECT_EQ(exact, oracle::rank(rows));
    }
}

TEST(RankProperties, InvariantUnderRowPermutationAndScaling) {
    Rng rng(5);
    const PrimeField f(F101);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t r = 0, c = 0;
        auto a = random_small(rng, r, c, 101);
        const auto base = rank_modp(to_mod(a, F101));
        EXPECT_LE(base, std::min(r, c));
        std::reverse(a.begin(), a.end());
        const auto k = static_cast<std::int64_t>(1 + rng.uniform_below(100));
        for (auto& v : a[0]) v = static_cast<std::int64_t>(f.mul(static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(k)));
        EXPECT_EQ(rank_modp(to_mod(a, F101)), base);
    }
}

TEST(RankExact, FractionalRowsAreCleared) {
    const auto q = FieldSpec::rational();
    const auto m = RationalMatrix::from_rows({{Rational(1, 3), Rational(2, 5), Rational(-7, 2)},
                                              {Rational(2, 3), Rational(4, 5), Rational(-7)},
                                              {Rational(0), Rational(1, 9), Rational(1)}},
                                             q);
    EXPECT_EQ(rank_exact(m), 2U);
}

TEST(DenseMatrix, ShapeChecks) {
    EXPECT_THROW((void)ModMatrix(2, 2, std::vector<std::uint64_t>{1, 2, 3}, F7), Error);
    EXPECT_THROW((void)ModMatrix::from_rows({{1, 2}, {3}}, F7), Error);
}
