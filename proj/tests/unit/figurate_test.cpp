#include "figura/figurate.hpp"

#include <gtest/gtest.h>

#include "oracles/oracles.hpp"

namespace fg = figura::figurate;
using figura::Int;

TEST(Figurate, PolygonalExamples) {
    EXPECT_EQ(fg::polygonal(3, 1), 1);
    EXPECT_EQ(fg::polygonal(3, 0), 0);
    EXPECT_EQ(fg::polygonal(5, 3), 12);
    EXPECT_EQ(fg::polygonal(3, -1), 0);
    EXPECT_THROW(fg::polygonal(2, 4), figura::InvalidKind);
    EXPECT_THROW(fg::FigurateKind::polygonal(2), figura::InvalidKind);
}

TEST(Figurate, SolidExamples) {
    EXPECT_EQ(fg::octahedral(1), 1);
    EXPECT_EQ(fg::octahedral(4), 44);
    EXPECT_EQ(fg::octahedral(0), 0);
    EXPECT_EQ(fg::tetrahedral(1), 1);
    EXPECT_EQ(fg::tetrahedral(3), 10);
    EXPECT_EQ(fg::tetrahedral(-1), 0);
    EXPECT_EQ(fg::cube(1), 1);
    EXPECT_EQ(fg::cube(4), 64);
    EXPECT_EQ(fg::cube(0), 0);
}

TEST(Figurate, GeneratorsMatchGapSums) {
    for (Int t = 3; t <= 12; ++t)
        for (Int k = -2; k <= 200; ++k) ASSERT_EQ(fg::polygonal(t, k), oracle::polygonal_by_gaps(t, k)) << t << "," << k;
    for (Int n = 0; n <= 300; ++n) {
        ASSERT_EQ(fg::octahedral(n), oracle::octahedral_by_gaps(n));
        ASSERT_EQ(fg::tetrahedral(n), oracle::tetrahedral_by_sum(n));
    }
}

TEST(Figurate, GapIdentities) {
    for (Int k = 1; k <= 500; ++k) {
        for (Int t = 3; t <= 10; ++t) ASSERT_EQ(fg::polygonal(t, k + 1) - fg::polygonal(t, k), (t - 2) * k + 1);
        ASSERT_EQ(fg::octahedral(k + 1) - fg::octahedral(k), k * k + (k + 1) * (k + 1));
        ASSERT_EQ(fg::cube(k + 1) - fg::cube(k), 3 * k * k + 3 * k + 1);
    }
}

TEST(Figurate, BridgeIdentities) {
    for (Int a = -1; a <= 500; ++a) {
        ASSERT_EQ(fg::octahedral(a + 1), 4 * fg::tetrahedral(a) + a + 1) << a;
        ASSERT_EQ(fg::cube(a + 1), 6 * fg::tetrahedral(a) + a + 1) << a;
        for (Int t = 3; t <= 10; ++t)
            ASSERT_EQ(fg::polygonal(t, a + 2), (t - 2) * fg::triangular(a) + (t - 1) * a + t) << t << "," << a;
    }
}

TEST(Figurate, TriangularAtOddRankIsHexagonal) {
    for (Int m = 0; m <= 500; ++m) ASSERT_EQ(fg::triangular(2 * m - 1), fg::polygonal(6, m)) << m;
}

TEST(Figurate, RankOf) {
    EXPECT_EQ(fg::rank_of(fg::FigurateKind::octahedral(), 44), 4);
    EXPECT_EQ(fg::rank_of(fg::FigurateKind::polygonal(4), 26), std::nullopt);
    EXPECT_EQ(fg::rank_of(fg::FigurateKind::cube(), 1), 1);
    EXPECT_EQ(fg::rank_of(fg::FigurateKind::cube(), 0), std::nullopt);
    EXPECT_THROW(fg::rank_of(fg::FigurateKind::cube(), -3), figura::InvalidArgument);
    for (auto kind : {fg::FigurateKind::polygonal(3), fg::FigurateKind::polygonal(7), fg::FigurateKind::octahedral(),
                      fg::FigurateKind::tetrahedral(), fg::FigurateKind::cube()}) {
        for (Int k = 1; k <= 300; ++k) {
            const Int v = fg::value(kind, k);
            ASSERT_EQ(fg::rank_of(kind, v), k) << kind.name();
            if (fg::value(kind, k + 1) > v + 1) ASSERT_EQ(fg::rank_of(kind, v + 1), std::nullopt);
        }
    }
}

TEST(Figurate, RankOfNearInt64Limit) {
    // Probes above the answer overflow internally and must count as "too big".
    const Int k = 2000000;
    EXPECT_EQ(fg::rank_of(fg::FigurateKind::cube(), fg::cube(k)), k);
}

TEST(Figurate, OverflowIsReported) {
    EXPECT_THROW(fg::cube(Int{3000000}), figura::OverflowError);
    EXPECT_THROW(fg::octahedral(Int{3000000}), figura::OverflowError);
}

TEST(Figurate, SumOfTwoTriangular) {
    EXPECT_TRUE(fg::is_sum_two_triangular(0));
    EXPECT_TRUE(fg::is_sum_two_triangular(3));
    EXPECT_FALSE(fg::is_sum_two_triangular(5));
    for (Int n = 0; n <= 2000; ++n)
        ASSERT_EQ(fg::is_sum_two_triangular(n), oracle::ordered_triangular_pairs(n) > 0) << n;
}

TEST(Figurate, CountTwoTriangular) {
    EXPECT_EQ(fg::count_two_triangular(0), 1);
    EXPECT_EQ(fg::count_two_triangular(3), 2);
    // 4n+1 = 9: divisors 1, 9 are 1 mod 4 and 3 is 3 mod 4, so 2 - 1 = 1,
    // matching the single ordered pair (1, 1).
    EXPECT_EQ(fg::count_two_triangular(2), 1);
    for (Int n = 0; n <= 2000; ++n) ASSERT_EQ(fg::count_two_triangular(n), oracle::ordered_triangular_pairs(n)) << n;
}

TEST(Figurate, EulerTriangularScale) {
    EXPECT_EQ(fg::euler_triangular_scale(3, 1), 10);
    EXPECT_EQ(fg::euler_triangular_scale(5, 1), 28);
    EXPECT_EQ(fg::euler_triangular_scale(1, 6), 6);
    EXPECT_THROW(fg::euler_triangular_scale(2, 1), figura::InvalidArgument);
    EXPECT_THROW(fg::euler_triangular_scale(3, 2), figura::InvalidArgument);
    for (Int m = 1; m <= 21; m += 2)
        for (Int k = 0; k <= 30; ++k) ASSERT_TRUE(oracle::is_triangular(fg::euler_triangular_scale(m, fg::triangular(k))));
}

TEST(Figurate, ForbiddenThreeSquares) {
    EXPECT_TRUE(fg::is_forbidden_three_squares(7));
    EXPECT_TRUE(fg::is_forbidden_three_squares(28));
    EXPECT_FALSE(fg::is_forbidden_three_squares(75));
    EXPECT_FALSE(fg::is_forbidden_three_squares(0));
    EXPECT_TRUE(fg::is_forbidden_three_squares(4 * 4 * 15));
}

TEST(Figurate, SquareShiftIdentity) {
    EXPECT_EQ(fg::square_shift_identity(5, 1), std::make_pair(Int{25}, Int{25}));
    EXPECT_EQ(fg::square_shift_identity(6, 2), std::make_pair(Int{49}, Int{49}));
    EXPECT_EQ(fg::square_shift_identity(7, 2), std::make_pair(Int{289}, Int{289}));
    EXPECT_THROW(fg::square_shift_identity(8, 2), figura::InvalidArgument);
    for (Int t = 5; t <= 7; ++t)
        for (Int k = 1; k <= 10000; ++k) {
            const auto [l, r] = fg::square_shift_identity(t, k);
            ASSERT_EQ(l, r) << t << "," << k;
        }
}

TEST(Figurate, IsqrtExact) {
    for (Int v = 0; v <= 100000; ++v) {
        const Int r = fg::isqrt(v);
        ASSERT_LE(r * r, v);
        ASSERT_GT((r + 1) * (r + 1), v);
    }
    const Int big = 3037000499;  // floor(sqrt(2^63 - 1))
    EXPECT_EQ(fg::isqrt(big * big), big);
    EXPECT_EQ(fg::isqrt(big * big - 1), big - 1);
}
