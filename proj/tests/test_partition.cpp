#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include <charnum/partition.hpp>

#include "oracles.hpp"

using namespace charnum;

TEST(Partition, RejectsMalformedParts)
{
    EXPECT_THROW(Partition({1, 2}), error);
    EXPECT_THROW(Partition({2, 0}), error);
    EXPECT_EQ(Partition::from_parts({1, 3, 2}), Partition({3, 2, 1}));
    EXPECT_EQ(Partition().weight(), 0);
    EXPECT_EQ(Partition({3, 1, 1}).weight(), 5);
}

TEST(Partition, Conjugate)
{
    EXPECT_EQ(Partition({3, 1}).conjugate(), Partition({2, 1, 1}));
    EXPECT_EQ(Partition({2, 2}).conjugate(), Partition({2, 2}));
    EXPECT_EQ(Partition().conjugate(), Partition());
}

TEST(EnumeratePartitions, SmallCases)
{
    EXPECT_EQ(enumerate_partitions(0), std::vector<Partition>{Partition()});
    EXPECT_EQ(enumerate_partitions(3), (std::vector<Partition>{{3}, {2, 1}, {1, 1, 1}}));
    auto four = enumerate_partitions(4);
    EXPECT_EQ(four, (std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}}));
    EXPECT_THROW(enumerate_partitions(-1), error);
}

TEST(EnumeratePartitions, MatchesBruteForce)
{
    for (int n = 0; n <= 20; ++n) {
        auto ps = enumerate_partitions(n);
        EXPECT_EQ(static_cast<long long>(ps.size()), oracle::partition_count(n)) << "n=" << n;
        EXPECT_TRUE(std::is_sorted(ps.begin(), ps.end(), std::greater<>())) << "n=" << n;
        EXPECT_EQ(std::adjacent_find(ps.begin(), ps.end()), ps.end());
    }
    for (int n = 0; n <= 12; ++n)
        EXPECT_EQ(enumerate_partitions(n), oracle::partitions_from_compositions(n)) << "n=" << n;
}

TEST(LexCompare, Examples)
{
    EXPECT_EQ(lex_compare({2}, {1, 1}), std::strong_ordering::greater);
    EXPECT_EQ(lex_compare({2, 1}, {2, 1}), std::strong_ordering::equal);
    EXPECT_EQ(lex_compare({1, 1, 1}, {2, 1}), std::strong_ordering::less);
    EXPECT_THROW(lex_compare({2}, {2, 1}), error);
}

TEST(LexCompare, AgreesWithEnumerationPosition)
{
    for (int n = 1; n <= 9; ++n) {
        auto ps = enumerate_partitions(n);
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = 0; j < ps.size(); ++j)
                EXPECT_EQ(lex_compare(ps[i], ps[j]), j <=> i);
    }
}

TEST(PartitionUnion, Examples)
{
    EXPECT_EQ(partition_union({2}, {1}), Partition({2, 1}));
    EXPECT_EQ(partition_union({1}, {1}), Partition({1, 1}));
    EXPECT_EQ(partition_union({}, {3, 1}), Partition({3, 1}));
    EXPECT_EQ(partition_union({3, 1}, {2, 2}), Partition({3, 2, 2, 1}));
}

TEST(IsRefinement, Examples)
{
    EXPECT_TRUE(is_refinement({1, 1, 1}, {2, 1}));
    EXPECT_FALSE(is_refinement({3}, {2, 1}));
    EXPECT_TRUE(is_refinement({2, 1}, {2, 1}));
    EXPECT_TRUE(is_refinement({2, 2, 1, 1}, {3, 3}));
    EXPECT_FALSE(is_refinement({2, 2, 2}, {3, 3}));
    EXPECT_THROW(is_refinement({1}, {2}), error);
}

TEST(IsRefinement, ImpliesNotGreater)
{
    for (int n = 1; n <= 9; ++n)
        for (const auto& i : enumerate_partitions(n))
            for (const auto& j : enumerate_partitions(n))
                if (is_refinement(i, j))
                    EXPECT_NE(lex_compare(i, j), std::strong_ordering::greater) << i.to_string() << j.to_string();
}

TEST(IsRefinement, IffSplittingsNonempty)
{
    for (int n = 1; n <= 8; ++n)
        for (const auto& i : enumerate_partitions(n))
            for (const auto& j : enumerate_partitions(n))
                EXPECT_EQ(is_refinement(i, j), !splittings(i, j.parts()).empty()) << i.to_string() << j.to_string();
}

TEST(Splittings, Examples)
{
    auto a = splittings({1, 1}, {1, 1});
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(a[0], (std::vector<Partition>{{1}, {1}}));

    auto b = splittings({2, 1, 1}, {2, 2});
    EXPECT_EQ(b, (std::vector<std::vector<Partition>>{{{2}, {1, 1}}, {{1, 1}, {2}}}));

    EXPECT_TRUE(splittings({3}, {1, 2}).empty());
    EXPECT_THROW(splittings({3}, {1, 1}), error);
}

TEST(Splittings, SingleComponentIsIdentity)
{
    for (int n = 0; n <= 7; ++n)
        for (const auto& p : enumerate_partitions(n))
            EXPECT_EQ(splittings(p, {n}), std::vector<std::vector<Partition>>{{p}});
}

TEST(Splittings, SwapSymmetry)
{
    for (int n = 1; n <= 8; ++n)
        for (int a = 0; a <= n; ++a)
            for (const auto& p : enumerate_partitions(n)) {
                std::set<std::vector<Partition>> ab, ba;
                for (auto t : splittings(p, {a, n - a}))
                    ab.insert({t[1], t[0]});
                for (auto t : splittings(p, {n - a, a}))
                    ba.insert(t);
                EXPECT_EQ(ab, ba);
            }
}

TEST(Splittings, MatchesLabellingBruteForce)
{
    std::mt19937_64 rng(oracle::seed());
    for (int n = 1; n <= 8; ++n)
        for (const auto& p : enumerate_partitions(n))
            for (int trial = 0; trial < 4; ++trial) {
                // Random composition of n as the shape.
                std::vector<int> shape;
                int left = n;
                while (left > 0) {
                    int take = std::uniform_int_distribution<int>(1, left)(rng);
                    shape.push_back(take);
                    left -= take;
                }
                auto got = splittings(p, shape);
                std::set<std::vector<Partition>> as_set(got.begin(), got.end());
                EXPECT_EQ(as_set.size(), got.size()) << "duplicates for " << p.to_string();
                EXPECT_EQ(as_set, oracle::brute_splittings(p, shape)) << p.to_string();
            }
}
