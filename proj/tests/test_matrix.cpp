#include <gtest/gtest.h>

#include <random>

#include "nodal/matrix.hpp"

namespace nodal {
namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long long>> rows) {
    IntMatrix m;
    for (auto row : rows) {
        m.emplace_back();
        for (auto v : row)
            m.back().emplace_back(v);
    }
    return m;
}

TEST(Hermite, ReducesAbovePivots) {
    // Lattice spanned by (2, 0) and (1, 3): basis (1, 3), (0, 6).
    const auto h = hermite_rows(mat({{2, 0}, {1, 3}}));
    EXPECT_EQ(h, mat({{1, 3}, {0, 6}}));
    EXPECT_EQ(pivot_columns(h), (std::vector<std::size_t>{0, 1}));
}

TEST(Hermite, DropsDependentRows) {
    const auto h = hermite_rows(mat({{-1, 1}, {1, -1}}));
    EXPECT_EQ(h, mat({{1, -1}}));
    EXPECT_TRUE(hermite_rows(mat({{0, 0}})).empty());
}

TEST(Smith, KnownExample) {
    const auto f = smith_invariants(mat({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}));
    EXPECT_EQ(f, (std::vector<BigInt>{2, 6, 12}));
    EXPECT_EQ(smith_invariants(mat({{2, 0}, {0, 3}})), (std::vector<BigInt>{1, 6}));
    EXPECT_TRUE(smith_invariants(mat({{0, 0}, {0, 0}})).empty());
}

TEST(Smith, DivisibilityChainAndDeterminant) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        IntMatrix m(3, std::vector<BigInt>(3));
        for (auto &row : m)
            for (auto &v : row)
                v = entry(rng);
        const auto f = smith_invariants(m);
        for (std::size_t i = 1; i < f.size(); ++i)
            EXPECT_EQ(f[i] % f[i - 1], 0);
        const BigInt det = bareiss_determinant(m);
        if (det == 0) {
            EXPECT_LT(f.size(), 3U);
        } else {
            ASSERT_EQ(f.size(), 3U);
            EXPECT_EQ(f[0] * f[1] * f[2], abs(det));
        }
    }
}

TEST(Bareiss, Determinants) {
    EXPECT_EQ(bareiss_determinant(mat({{0, 1}, {1, 0}})), -1);
    EXPECT_EQ(bareiss_determinant(mat({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}})), 4);
    EXPECT_EQ(bareiss_determinant({}), 1);
    EXPECT_EQ(bareiss_determinant(mat({{1, 2}, {2, 4}})), 0);
}

TEST(SolveRational, ExactSolution) {
    const auto x = solve_rational(mat({{2, 1}, {1, 3}}), {BigInt(1), BigInt(2)});
    ASSERT_TRUE(x);
    EXPECT_EQ((*x)[0], Rational(1, 5));
    EXPECT_EQ((*x)[1], Rational(3, 5));
    EXPECT_FALSE(solve_rational(mat({{1, 2}, {2, 4}}), {BigInt(1), BigInt(2)}));
}

TEST(FloorDiv, RoundsDown) {
    EXPECT_EQ(floor_div(7, 3), 2);
    EXPECT_EQ(floor_div(-7, 3), -3);
    EXPECT_EQ(floor_div(-6, 3), -2);
    EXPECT_EQ(floor_div(0, 5), 0);
}

} // namespace
} // namespace nodal
