#include "figura/identities.hpp"

#include <gtest/gtest.h>

#include "figura/figurate.hpp"
#include "oracles/oracles.hpp"

namespace id = figura::identities;
using figura::Int;

TEST(Identities, ThreeSquareLinesAtOrigin) {
    const auto reps = id::verify_thm3(1, 1);
    EXPECT_EQ(reps[0].family, id::Family::R);
    EXPECT_EQ(reps[0].lhs, 2091);
    EXPECT_EQ(reps[0].rhs, 2091);
    EXPECT_EQ(reps[1].lhs, 899);
    EXPECT_EQ(reps[2].lhs, 5507);
    for (const auto& r : reps) EXPECT_TRUE(r.holds);
}

TEST(Identities, ThreeSquareLinesHoldOnGrid) {
    for (Int j = 1; j <= 60; ++j)
        for (Int i = 1; i <= 60; ++i)
            for (const auto& r : id::verify_thm3(j, i)) {
                ASSERT_TRUE(r.holds) << id::to_string(r.family) << " " << j << "," << i;
                ASSERT_EQ(r.lhs, r.rhs);
            }
}

TEST(Identities, EntriesRejectNonPositiveIndices) {
    EXPECT_THROW(id::r_entry(0, 1), figura::InvalidArgument);
    EXPECT_THROW(id::m_entry(1, 0), figura::InvalidArgument);
}

TEST(Identities, MatrixWindows) {
    const std::vector<std::vector<Int>> m = {
        {4786, 5977, 7384}, {8047, 9688, 11581}, {12538, 14701, 17152}, {18457, 21214, 24295}};
    const std::vector<std::vector<Int>> n = {
        {4068, 4465, 4934}, {8261, 8808, 9439}, {14788, 15509, 16326}, {24183, 25102, 26129}};
    EXPECT_EQ(id::matrix_window(id::MatrixId::M, 4, 3), m);
    EXPECT_EQ(id::matrix_window(id::MatrixId::N, 4, 3), n);
}

TEST(Identities, TwoEqualCubeLinesHold) {
    for (Int j = 1; j <= 50; ++j)
        for (Int i = 1; i <= 50; ++i) {
            ASSERT_TRUE(id::verify_thm4(j, i).holds) << j << "," << i;
            ASSERT_TRUE(id::verify_cor5(j, i).holds) << j << "," << i;
        }
}

TEST(Identities, CubeDifferenceMatchesDirectCubes) {
    for (Int j = 1; j <= 20; ++j)
        for (Int i = 1; i <= 20; ++i) {
            const Int x = -(4 * j + 8), y = -(2 * j + 4), z = 2 * j + i + 8;
            ASSERT_EQ(x * x * x + y * y * y + 2 * z * z * z, id::m_entry(j, i) - id::n_entry(j, i));
        }
}

TEST(Identities, ModNineParamsAreChecked) {
    EXPECT_NO_THROW(id::check_cor6_params(1, {2, 2, 0}));
    EXPECT_THROW(id::check_cor6_params(1, {1, 2, 0}), figura::InvalidArgument);
    EXPECT_THROW(id::check_cor6_params(4, {2, 1, 0}), figura::InvalidArgument);
    EXPECT_NO_THROW(id::check_cor6_params(4, {2, 1, 1}));
    EXPECT_THROW(id::check_cor6_params(6, {2, 2, 0}), figura::InvalidArgument);
}

TEST(Identities, ModNineResidueIsFive) {
    for (int line = 1; line <= 5; ++line)
        for (const auto& p : id::cor6_tuples(line, 40)) {
            const auto rep = id::cor6_residues(line, p);
            ASSERT_TRUE(rep.holds) << line;
            ASSERT_EQ(figura::mod_floor(rep.lhs, 9), 5);
            ASSERT_EQ(rep.rhs, 5);
        }
}

TEST(Identities, ModNineTupleOrdering) {
    const auto t = id::cor6_tuples(1, 3);
    ASSERT_EQ(t.size(), 3u);
    EXPECT_EQ(t[0], (id::Cor6Params{2, 2, 0}));
    EXPECT_EQ(t[1], (id::Cor6Params{2, 5, 0}));
    EXPECT_EQ(t[2], (id::Cor6Params{5, 2, 0}));
    const auto u = id::cor6_tuples(4, 1);
    EXPECT_EQ(u[0], (id::Cor6Params{2, 1, 1}));
}

TEST(Identities, FourCubeWitness) {
    EXPECT_EQ(id::four_cube_witness(718, 20), (std::array<Int, 4>{5, 5, 5, 7}));
    EXPECT_EQ(id::four_cube_witness(4, 5), (std::array<Int, 4>{1, 1, 1, 1}));
    EXPECT_EQ(id::four_cube_witness(5, 5), std::nullopt);
    for (Int n = 1; n <= 3000; ++n) ASSERT_EQ(id::four_cube_witness(n, 15), oracle::four_cubes_naive(n, 15)) << n;
}

TEST(Identities, IntegerCubeRootCeil) {
    EXPECT_EQ(id::icbrt_ceil(0), 0);
    EXPECT_EQ(id::icbrt_ceil(1), 1);
    EXPECT_EQ(id::icbrt_ceil(8), 2);
    EXPECT_EQ(id::icbrt_ceil(9), 3);
    for (Int n = 0; n <= 20000; ++n) {
        const Int r = id::icbrt_ceil(n);
        ASSERT_GE(r * r * r, n);
        ASSERT_TRUE(r == 0 || (r - 1) * (r - 1) * (r - 1) < n);
    }
}
