#include <gtest/gtest.h>

#include <skewlr/harness.hpp>

using namespace skewlr;

TEST(Enumerate, TinyBounds) {
    auto v = enumerate_basic_shapes(2, 2, 2);
    std::vector<SkewShape> want{make_skew({1}), make_skew({1, 1}), make_skew({2}), make_skew({2, 1}, {1})};
    EXPECT_EQ(v, want);
    EXPECT_EQ(enumerate_basic_shapes(1, 5, 5), std::vector<SkewShape>{make_skew({1})});
    EXPECT_THROW(enumerate_basic_shapes(0, 1, 1), OutOfRange);
}

TEST(Enumerate, RegressionCount) { EXPECT_EQ(enumerate_basic_shapes(6, 6, 6).size(), 400u); }

TEST(Enumerate, ExhaustiveAndDuplicateFree) {
    for (int n = 1; n <= 6; ++n) {
        std::set<SkewShape> brute;
        for (int s = 1; s <= 25; ++s)
            for (auto& lam : partitions_of(s, 5, 5))
                for (int k = 0; k < s; ++k)
                    for (auto& mu : partitions_of(k, 5, 5)) {
                        if (mu.length() > lam.length()) continue;
                        bool ok = true;
                        for (int i = 0; i < mu.length(); ++i) ok = ok && mu[i] <= lam[i];
                        if (!ok) continue;
                        auto A = make_skew(lam, mu);
                        if (A.size() <= n && is_basic(A)) brute.insert(A);
                    }
        auto v = enumerate_basic_shapes(n, 5, 5);
        std::set<SkewShape> got(v.begin(), v.end());
        ASSERT_EQ(got.size(), v.size());
        ASSERT_EQ(got, brute);
        for (auto& A : v) ASSERT_EQ(basic_form(A), A);
    }
}

TEST(Scan, Main) {
    EXPECT_TRUE(cross_validate_main({1, 1, 1}, 1).ok());
    auto r = cross_validate_main({8, 8, 8}, 2);
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.scanned, static_cast<long>(enumerate_basic_shapes(8, 8, 8).size()));
    EXPECT_GT(r.mf_and_full, 0);
}

TEST(Scan, MutationSurfacesA7Example) {
    auto r = cross_validate_main({14, 6, 4}, 2, Mutation{Config::A7});
    bool found = false;
    for (auto& d : r.disagreements)
        if (d.object == "[4,4,4,4,3,3]/[3,2,1,1,1]") found = d.classifier == "false" && d.oracle == "true";
    EXPECT_TRUE(found);
    EXPECT_TRUE(cross_validate_main({14, 6, 4}, 2).ok());
}

TEST(Scan, DeterministicAcrossWorkerCounts) {
    auto a = cross_validate_main({9, 5, 5}, 1, Mutation{Config::A2});
    auto b = cross_validate_main({9, 5, 5}, 3, Mutation{Config::A2});
    ASSERT_EQ(a.disagreements.size(), b.disagreements.size());
    ASSERT_FALSE(a.disagreements.empty());
    for (std::size_t i = 0; i < a.disagreements.size(); ++i) EXPECT_EQ(a.disagreements[i].object, b.disagreements[i].object);
    EXPECT_EQ(a.full, b.full);
    EXPECT_EQ(a.mf, b.mf);
}

TEST(Scan, MfAndProducts) {
    EXPECT_TRUE(cross_validate_mf({8, 8, 8}, 2).ok());
    EXPECT_TRUE(cross_validate_products(5, 2).ok());
}

TEST(Scan, RibbonEnumeration) {
    auto v = admissible_ribbons(4, 3);
    // s=3: 3*2*3, s=4: 3*2*2*3.
    EXPECT_EQ(v.size(), 18u + 36u);
    EXPECT_THROW(admissible_ribbons(2, 3), OutOfRange);
    auto r = cross_validate_ribbon(3, 4, 2);
    EXPECT_TRUE(r.ok());
}
