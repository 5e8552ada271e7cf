#include <gtest/gtest.h>

#include <random>

#include <skewlr/partition.hpp>

#include "oracle.hpp"

using namespace skewlr;

TEST(Partition, CanonicalForm) {
    EXPECT_EQ(Partition({3, 2, 2, 0, 0}), Partition({3, 2, 2}));
    EXPECT_TRUE(Partition{}.empty());
    EXPECT_THROW(Partition({2, 3}), InvalidPartition);
    EXPECT_THROW(Partition({2, -1}), InvalidPartition);
    EXPECT_EQ(Partition({5, 4, 2}).size(), 11);
    EXPECT_EQ(Partition({5, 4, 2}).length(), 3);
}

TEST(Partition, Conjugate) {
    EXPECT_EQ(conjugate({4, 4, 2}), Partition({3, 3, 2, 2}));
    EXPECT_EQ(conjugate({2, 1}), Partition({2, 1}));
    EXPECT_EQ(conjugate({}), Partition{});
    EXPECT_EQ(conjugate({5, 4, 2}), Partition({3, 3, 2, 2, 1}));
}

TEST(Partition, ConjugateIsInvolutionUpTo30) {
    for (int n = 0; n <= 30; ++n)
        for (auto& p : partitions_of(n)) {
            ASSERT_EQ(conjugate(conjugate(p)), p);
            ASSERT_EQ(conjugate(p).parts(), oracle::transpose(p.parts()));
        }
}

TEST(Partition, Dominance) {
    EXPECT_TRUE(dominated_by({4, 3, 3, 1, 1}, {7, 4, 1}));
    EXPECT_TRUE(dominated_by({3, 2, 1}, {3, 2, 1}));
    EXPECT_FALSE(dominated_by({3, 1, 1}, {2, 2, 1}));
    EXPECT_THROW(dominated_by({2}, {1}), SizeMismatch);
}

TEST(Partition, DominanceIsSelfDualPartialOrder) {
    for (int n = 1; n <= 10; ++n) {
        auto ps = partitions_of(n);
        for (auto& a : ps)
            for (auto& b : ps) {
                bool ab = dominated_by(a, b);
                ASSERT_EQ(ab, oracle::dominates(b.parts(), a.parts()));
                ASSERT_EQ(ab, dominated_by(conjugate(b), conjugate(a)));
                if (ab && dominated_by(b, a)) ASSERT_EQ(a, b);
            }
        ASSERT_TRUE(dominated_by(ps.front(), ps.front()));
    }
    for (int n = 1; n <= 7; ++n) {
        auto ps = partitions_of(n);
        for (auto& a : ps)
            for (auto& b : ps)
                for (auto& c : ps)
                    if (dominated_by(a, b) && dominated_by(b, c)) ASSERT_TRUE(dominated_by(a, c));
    }
}

TEST(Partition, Covers) {
    EXPECT_TRUE(covers({2, 2, 1}, {2, 1, 1, 1}));
    EXPECT_TRUE(covers({2}, {1, 1}));
    // (2,2,1) ⋖ (3,1,1) holds; the pair is comparable with nothing strictly between.
    EXPECT_TRUE(covers({3, 1, 1}, {2, 2, 1}));
    EXPECT_FALSE(covers({3, 2}, {2, 1, 1, 1}));
}

TEST(Partition, CoversMatchesIntervalDefinition) {
    for (int n = 1; n <= 10; ++n) {
        auto ps = partitions_of(n);
        for (auto& a : ps)
            for (auto& b : ps) {
                bool expect = false;
                if (a != b && dominated_by(b, a)) {
                    expect = true;
                    for (auto& c : ps)
                        if (c != a && c != b && dominated_by(b, c) && dominated_by(c, a)) expect = false;
                }
                ASSERT_EQ(covers(a, b), expect) << to_string(a) << " " << to_string(b);
            }
    }
}

TEST(Partition, DominanceInterval) {
    using V = std::vector<Partition>;
    EXPECT_EQ(dominance_interval({2, 1, 1, 1}, {3, 1, 1}), (V{{3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1}}));
    EXPECT_EQ(dominance_interval({4, 2}, {4, 2}), (V{{4, 2}}));
    EXPECT_EQ(dominance_interval({4, 3, 2, 1}, {4, 4, 2}), (V{{4, 4, 2}, {4, 4, 1, 1}, {4, 3, 3}, {4, 3, 2, 1}}));
    EXPECT_THROW(dominance_interval({3}, {2, 1}), NotComparable);
}

TEST(Partition, DominanceIntervalMatchesFilter) {
    for (int n = 1; n <= 12; ++n) {
        auto all = oracle::partitions(n);
        auto ps = partitions_of(n);
        std::mt19937 rng(n);
        for (int trial = 0; trial < 40; ++trial) {
            auto w = ps[rng() % ps.size()], v = ps[rng() % ps.size()];
            if (!dominated_by(w, v)) std::swap(w, v);
            if (!dominated_by(w, v)) continue;
            std::vector<Partition> expect;
            for (auto& q : all)
                if (oracle::dominates(q, w.parts()) && oracle::dominates(v.parts(), q)) expect.emplace_back(q);
            ASSERT_EQ(dominance_interval(w, v), expect);
        }
    }
}

TEST(Partition, AddAndUnion) {
    EXPECT_EQ(add({3, 2, 1}, {2, 1}), Partition({5, 3, 1}));
    EXPECT_EQ(union_of({3, 2, 1}, {2, 1}), Partition({3, 2, 2, 1, 1}));
    EXPECT_EQ(add({}, {4, 2}), Partition({4, 2}));
    EXPECT_EQ(union_of({}, {4, 2}), Partition({4, 2}));
    EXPECT_EQ(add({2, 2}, {2, 2}), Partition({4, 4}));
    EXPECT_EQ(union_of({2, 2}, {2, 2}), Partition({2, 2, 2, 2}));
}

TEST(Partition, UnionIsConjugateOfAdd) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        auto as = partitions_of(static_cast<int>(rng() % 9));
        auto bs = partitions_of(static_cast<int>(rng() % 9));
        auto a = as[rng() % as.size()], b = bs[rng() % bs.size()];
        ASSERT_EQ(union_of(a, b), conjugate(add(conjugate(a), conjugate(b))));
    }
}

TEST(Partition, ShapeClass) {
    auto r = shape_class({3, 3, 3});
    EXPECT_TRUE(r.rectangle);
    EXPECT_FALSE(r.fat_hook);
    auto f = shape_class({4, 4, 1});
    EXPECT_TRUE(f.fat_hook);
    EXPECT_TRUE(f.near_rectangle);
    EXPECT_FALSE(f.hook);
    auto h = shape_class({5, 1, 1});
    EXPECT_TRUE(h.fat_hook);
    EXPECT_TRUE(h.hook);
    EXPECT_TRUE(h.near_rectangle);
    auto z = shape_class({});
    EXPECT_TRUE(z.zero);
    EXPECT_FALSE(z.near_rectangle);
    EXPECT_TRUE(shape_class({3, 2, 1}).other());
    EXPECT_TRUE(shape_class({4}).one_line_rectangle);
    EXPECT_TRUE(shape_class({1, 1, 1}).one_line_rectangle);
    EXPECT_TRUE(shape_class({3, 3}).two_line_rectangle);
}

TEST(Partition, ComplementAndShortness) {
    EXPECT_EQ(complement({4, 4, 2}, 4, 3), Partition({2}));
    EXPECT_EQ(shortness({4, 4, 2}, 4, 3), 1);
    EXPECT_EQ(complement({}, 3, 2), Partition({3, 3}));
    EXPECT_EQ(complement({2, 1}, 3, 3), Partition({3, 2, 1}));
    EXPECT_EQ(shortness({2, 1}, 3, 3), 1);
    EXPECT_EQ(shortness({}, 3, 2), 2);
    EXPECT_THROW(complement({5}, 4, 3), DoesNotFit);
}

TEST(Partition, ComplementIsInvolution) {
    for (int n = 0; n <= 12; ++n)
        for (auto& p : partitions_of(n, 4, 4)) ASSERT_EQ(complement(complement(p, 4, 4), 4, 4), p);
}

TEST(Partition, TextSyntax) {
    EXPECT_EQ(parse_partition("[5,4,2]"), Partition({5, 4, 2}));
    EXPECT_EQ(parse_partition("[]"), Partition{});
    EXPECT_EQ(parse_partition("[3^2,1]"), Partition({3, 3, 1}));
    EXPECT_EQ(to_string(Partition{3, 3, 1}), "[3,3,1]");
    EXPECT_THROW(parse_partition("[1,2]"), ParseError);
    EXPECT_THROW(parse_partition("[1,"), ParseError);
    EXPECT_THROW(parse_partition("5,4"), ParseError);
    for (int n = 0; n <= 8; ++n)
        for (auto& p : partitions_of(n)) ASSERT_EQ(parse_partition(to_string(p)), p);
}
