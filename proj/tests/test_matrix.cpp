#include <random>

#include <gtest/gtest.h>

#include <charnum/matrix.hpp>

#include "oracles.hpp"

using namespace charnum;

namespace {

// Laplace expansion along the first row.
integer cofactor_det(const IntMatrix& m)
{
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    integer total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j)
                    minor(r - 1, cc++) = m(r, c);
        integer term = m(0, j) * cofactor_det(minor);
        total += (j % 2 == 0) ? term : integer(-term);
    }
    return total;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int lo, int hi)
{
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = d(rng);
    return m;
}

} // namespace

TEST(DetInt, Examples)
{
    EXPECT_EQ(det_int(IntMatrix({{1}})), 1);
    EXPECT_EQ(det_int(IntMatrix({{0, 1}, {1, 2}})), -1);
    EXPECT_EQ(det_int(IntMatrix::identity(5)), 1);
    EXPECT_EQ(det_int(IntMatrix({{1, 2}, {2, 4}})), 0);
    EXPECT_THROW(det_int(IntMatrix(2, 3)), error);
}

TEST(DetInt, MatchesCofactorExpansion)
{
    std::mt19937_64 rng(oracle::seed());
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + trial % 6;
        // Small ranges make zero pivots and singular matrices common.
        auto m = random_matrix(rng, n, -2, 2);
        EXPECT_EQ(det_int(m), cofactor_det(m));
    }
}

TEST(InverseUnimodular, Examples)
{
    EXPECT_EQ(inverse_unimodular(IntMatrix({{1}})), IntMatrix({{1}}));
    EXPECT_EQ(inverse_unimodular(IntMatrix({{0, 1}, {1, 2}})), IntMatrix({{-2, 1}, {1, 0}}));
    EXPECT_EQ(inverse_unimodular(IntMatrix::identity(4)), IntMatrix::identity(4));
    EXPECT_THROW(inverse_unimodular(IntMatrix({{2}})), error);
    EXPECT_THROW(inverse_unimodular(IntMatrix({{1, 2}, {2, 4}})), error);
}

TEST(InverseUnimodular, RandomUnimodularProducts)
{
    std::mt19937_64 rng(oracle::seed());
    std::uniform_int_distribution<int> d(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 2 + trial % 5;
        // Product of unit lower and unit upper triangular matrices, with a
        // row swap for det -1.
        IntMatrix lo = IntMatrix::identity(n), up = IntMatrix::identity(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < i; ++j) {
                lo(i, j) = d(rng);
                up(j, i) = d(rng);
            }
        IntMatrix m = lo * up;
        if (trial % 2)
            for (std::size_t j = 0; j < n; ++j)
                std::swap(m(0, j), m(1, j));
        auto inv = inverse_unimodular(m);
        EXPECT_EQ(m * inv, IntMatrix::identity(n));
        EXPECT_EQ(inv * m, IntMatrix::identity(n));
    }
}

TEST(Adjugate, SingularFallsBackToCofactors)
{
    IntMatrix m({{1, 2}, {2, 4}});
    EXPECT_EQ(adjugate(m), IntMatrix({{4, -2}, {-2, 1}}));
    std::mt19937_64 rng(oracle::seed() + 1);
    for (int trial = 0; trial < 40; ++trial) {
        auto a = random_matrix(rng, 1 + trial % 4, -3, 3);
        auto adj = adjugate(a);
        auto prod = a * adj;
        auto det = cofactor_det(a);
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j)
                EXPECT_EQ(prod(i, j), i == j ? det : integer(0));
    }
}
