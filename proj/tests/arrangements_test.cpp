#include <fatpoints/arrangements.hpp>

#include <gtest/gtest.h>

#include "oracles.hpp"

#include <set>

using namespace fatpoints;

namespace {

const FieldSpec P31 = FieldSpec::prime_field(2147483647ULL);

std::size_t points_on(const LineForm& l, const Configuration& x) {
    std::size_t n = 0;
    for (const auto& p : x.points()) n += l.contains(p);
    return n;
}

bool concurrent(const std::array<std::int64_t, 3>& a, const std::array<std::int64_t, 3>& b, const std::array<std::int64_t, 3>& c,
                std::int64_t q) {
    const std::int64_t det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
    return ((det % q) + q) % q == 0;
}

}  // namespace

TEST(GeneralLines, TwoLinesMeetOnce) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto a = general_arrangement(2, P31, seed);
        ASSERT_EQ(a.lines.size(), 2U);
        EXPECT_FALSE(a.lines[0] == a.lines[1]);
        EXPECT_EQ(a.points.size(), 1U);
    }
}

TEST(GeneralLines, FiveLinesHaveTenDistinctIntersections) {
    const auto a = general_arrangement(5, P31, 17);
    const std::set<ProjectivePoint> distinct(a.points.begin(), a.points.end());
    EXPECT_EQ(distinct.size(), 10U);
    EXPECT_TRUE(detail::in_general_position(a.lines));
}

TEST(GeneralLines, NoFiveGeneralLinesOverF3) {
    // exhaustive: no 5 of the 13 lines of PG(2,3) are three-wise non-concurrent
    const auto lines = oracle::projective_plane(3);
    ASSERT_EQ(lines.size(), 13U);
    std::size_t found = 0;
    std::vector<bool> pick(lines.size(), false);
    std::fill(pick.begin(), pick.begin() + 5, true);
    do {
        std::vector<std::array<std::int64_t, 3>> chosen;
        for (std::size_t i = 0; i < lines.size(); ++i) {
            if (pick[i]) chosen.push_back(lines[i]);
        }
        bool ok = true;
        for (std::size_t i = 0; ok && i < 5; ++i) {
            for (std::size_t j = i + 1; ok && j < 5; ++j) {
                for (std::size_t k = j + 1; ok && k < 5; ++k) ok = !concurrent(chosen[i], chosen[j], chosen[k], 3);
            }
        }
        found += ok;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    EXPECT_EQ(found, 0U);

    try {
        (void)sample_general_lines(5, FieldSpec::prime_field(3), 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::genericity_failure);
    }
}

TEST(BuildCd, SizesAndIncidences) {
    EXPECT_EQ(build_c_d(2, P31, 1).size(), 1U);
    EXPECT_EQ(build_c_d(3, P31, 1).size(), 3U);
    for (int d = 3; d <= 7; ++d) {
        const auto a = general_arrangement(d, P31, 100 + static_cast<std::uint64_t>(d));
        const auto x = build_c_d(d, P31, 100 + static_cast<std::uint64_t>(d));
        ASSERT_EQ(x.size(), static_cast<std::size_t>(d * (d - 1) / 2));
        for (const auto& l : a.lines) EXPECT_EQ(points_on(l, x), static_cast<std::size_t>(d - 1));
        for (const auto& p : x.points()) {
            int through = 0;
            for (const auto& l : a.lines) through += l.contains(p);
            EXPECT_EQ(through, 2);
        }
    }
}

TEST(BuildCd, Deterministic) {
    EXPECT_EQ(build_c_d(6, P31, 9), build_c_d(6, P31, 9));
    EXPECT_FALSE(build_c_d(6, P31, 9) == build_c_d(6, P31, 10));
}

TEST(BuildCdr, Sizes) {
    EXPECT_EQ(build_c_dr(5, 1, P31, 7).size(), 11U);
    EXPECT_EQ(build_c_dr(5, 5, P31, 7).size(), 15U);
    EXPECT_EQ(build_c_dr(3, 0, P31, 7).size(), 3U);
    for (int d = 2; d <= 6; ++d) {
        for (int r = 0; r <= d; ++r) EXPECT_EQ(build_c_dr(d, r, P31, 3).size(), static_cast<std::size_t>(d * (d - 1) / 2 + r));
    }
}

TEST(BuildCdr, KeepsRPointsOnTheLastLine) {
    for (int r = 0; r <= 5; ++r) {
        const auto a = general_arrangement(6, P31, 21);
        const auto x = build_c_dr(5, r, P31, 21);
        EXPECT_EQ(points_on(a.lines[5], x), static_cast<std::size_t>(r));
        for (int i = 0; i < 5; ++i) {
            EXPECT_EQ(points_on(a.lines[static_cast<std::size_t>(i)], x), static_cast<std::size_t>(4 + (i < r ? 1 : 0)));
        }
    }
}

TEST(BuildCdr, FullRIsCdPlusOne) {
    const auto x = build_c_dr(5, 5, P31, 4);
    const auto y = build_c_d(6, P31, 4);
    EXPECT_EQ(x.points(), y.points());
}

TEST(BuildCdr, AlternativeRemoval) {
    const auto x = build_c_dr(5, 1, P31, 4, std::vector<int>{4});
    EXPECT_EQ(x.size(), 11U);
    EXPECT_THROW((void)build_c_dr(5, 1, P31, 4, std::vector<int>{5}), Error);
    EXPECT_THROW((void)build_c_dr(5, 2, P31, 4, std::vector<int>{1}), Error);
    EXPECT_THROW((void)build_c_dr(5, 6, P31, 4), Error);
}

TEST(RandomPoints, SizesAndDeterminism) {
    EXPECT_EQ(sample_random_points(1, P31, 5).size(), 1U);
    EXPECT_EQ(sample_random_points(2, P31, 5), sample_random_points(2, P31, 5));
    const auto x = sample_random_points(11, P31, 1);
    EXPECT_EQ(std::set<ProjectivePoint>(x.points().begin(), x.points().end()).size(), 11U);
    EXPECT_EQ(x.provenance().kind, ProvenanceKind::random);
    EXPECT_EQ(x.seed(), std::optional<std::uint64_t>(1));
}

TEST(RandomPoints, TinyFieldRunsOutOfPoints) {
    // P^2(F_3) has 13 points
    EXPECT_NO_THROW((void)sample_random_points(13, FieldSpec::prime_field(3), 1));
    EXPECT_THROW((void)sample_random_points(14, FieldSpec::prime_field(3), 1), Error);
}

TEST(CoordinateChange, PreservesIncidence) {
    Rng rng(8);
    const auto a = general_arrangement(5, P31, 2);
    const auto x = build_c_d(5, P31, 2);
    for (int k = 0; k < 10; ++k) {
        const auto m = random_coordinate_change(P31, rng);
        const auto y = transform(m, x);
        ASSERT_EQ(y.size(), x.size());
        for (std::size_t i = 0; i < x.size(); ++i) {
            for (std::size_t j = i + 1; j < x.size(); ++j) {
                for (std::size_t l = j + 1; l < x.size(); ++l) EXPECT_EQ(collinear(x[i], x[j], x[l]), collinear(y[i], y[j], y[l]));
            }
        }
    }
}
