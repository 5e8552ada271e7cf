#include <gtest/gtest.h>

#include <skewlr/harness.hpp>
#include <skewlr/skew.hpp>

using namespace skewlr;

namespace {
SkewShape S(const char* s) { return parse_skew(s); }
}  // namespace

TEST(Skew, MakeSkew) {
    auto A = make_skew({4, 4, 2}, {2, 1});
    EXPECT_EQ(A.size(), 7);
    EXPECT_EQ(make_skew({3, 2, 1}).size(), 6);
    EXPECT_THROW(make_skew({2, 2}, {3}), NotContained);
    EXPECT_THROW(make_skew({2}, {1, 1}), NotContained);
}

TEST(Skew, BasicForm) {
    EXPECT_EQ(basic_form(S("[5,5,2,2]/[5,4,2,1]")), S("[2,1]/[1]"));
    EXPECT_EQ(basic_form(S("[4,4,2]/[2,1]")), S("[4,4,2]/[2,1]"));
    EXPECT_EQ(basic_form(S("[3,3]/[3]")), S("[3]"));
    EXPECT_TRUE(is_basic(S("[4,4,2]/[2,1]")));
    EXPECT_FALSE(is_basic(S("[3,3]/[3]")));
}

TEST(Skew, Profiles) {
    auto p = profiles(S("[5,4,4,2,2,1,1]/[3,3,1]"));
    EXPECT_EQ(p.w, Partition({4, 3, 3, 1, 1}));
    EXPECT_EQ(p.n, Partition({7, 4, 1}));
    auto q = profiles(S("[3,2,1]"));
    EXPECT_EQ(q.w, Partition({3, 2, 1}));
    EXPECT_EQ(q.n, Partition({3, 2, 1}));
    auto r = profiles(S("[4,3,3,3]/[2,1]"));
    EXPECT_EQ(r.w, Partition({4, 3, 2, 1}));
    EXPECT_EQ(r.n, Partition({4, 4, 2}));
}

TEST(Skew, ProfilesAreOrdered) {
    for (auto& A : enumerate_basic_shapes(12, 12, 12)) {
        auto p = profiles(A);
        ASSERT_TRUE(dominated_by(p.w, p.n)) << to_string(A);
    }
}

TEST(Skew, Components) {
    auto c = components(S("[5,5,2,2]/[4,2,1]"));
    ASSERT_EQ(c.size(), 2u);
    EXPECT_EQ(c[0], S("[3,3]/[2]"));
    EXPECT_EQ(c[1], S("[2,2]/[1]"));
    EXPECT_EQ(components(S("[4,4,2]/[2,1]")).size(), 1u);
    auto d = components(basic_form(S("[4,3,3]/[3,1,1]")));
    ASSERT_EQ(d.size(), 2u);
    EXPECT_EQ(d[0], S("[1]"));
    EXPECT_EQ(d[1], S("[2,2]"));
}

TEST(Skew, Predicates) {
    auto f = shape_predicates(S("[5,3,3,2]/[2,2,1]"));
    EXPECT_TRUE(f.ribbon);
    EXPECT_TRUE(f.connected);
    auto g = shape_predicates(S("[1,1,1]"));
    EXPECT_TRUE(g.vertical_strip);
    EXPECT_TRUE(g.ribbon);
    EXPECT_TRUE(g.is_partition);
    auto h = shape_predicates(S("[4,4]/[2]"));
    EXPECT_TRUE(h.has_2x2_block);
    EXPECT_TRUE(h.connected);
    EXPECT_FALSE(h.ribbon);
    EXPECT_TRUE(h.is_rotated_partition);
    // Corner-touching cells are not connected.
    EXPECT_FALSE(shape_predicates(S("[2,1]/[1]")).connected);
}

TEST(Skew, RotationAndConjugation) {
    auto A = S("[4,4,2]/[2,1]");
    EXPECT_EQ(rotate_pi(A), S("[4,3,2]/[2]"));
    EXPECT_EQ(conjugate_shape(A), S("[3,3,2,2]/[2,1]"));
    EXPECT_EQ(conjugate_shape(S("[3,1]")), S("[2,1,1]"));
    for (auto& B : enumerate_basic_shapes(8, 8, 8)) {
        auto p = profiles(B);
        ASSERT_EQ(rotate_pi(rotate_pi(B)), B);
        ASSERT_EQ(conjugate_shape(conjugate_shape(B)), B);
        auto pr = profiles(rotate_pi(B));
        ASSERT_EQ(pr.w, p.w);
        ASSERT_EQ(pr.n, p.n);
        auto pc = profiles(conjugate_shape(B));
        ASSERT_EQ(pc.w, conjugate(p.n));
        ASSERT_EQ(pc.n, conjugate(p.w));
        for (auto g : {Symmetry::id, Symmetry::pi, Symmetry::conj, Symmetry::pi_conj})
            ASSERT_EQ(apply_symmetry(apply_symmetry(B, g), g), B);
    }
}

TEST(Skew, DirectSumAndBullet) {
    auto d = direct_sum(S("[1]"), S("[1]"));
    EXPECT_EQ(d, S("[2,1]/[1]"));
    EXPECT_EQ(components(d).size(), 2u);
    // u = (3,2,2), v = (3,1,1), n = 4 and the same with a (2^4) block added to u.
    EXPECT_EQ(bullet({3, 2, 2}, {3, 1, 1}, 4), S("[6,4,4,3]/[3,1,1]"));
    EXPECT_EQ(bullet({5, 4, 4, 2}, {3, 1, 1}, 4), S("[8,6,6,5]/[3,1,1]"));
    EXPECT_EQ(bullet({3, 2, 2}, {2, 1, 1}, 5), S("[5,4,4,3,3]/[3,3,1,1]"));
    EXPECT_EQ(bullet({2}, {1}, 1), S("[3]"));
    EXPECT_THROW(bullet({1, 1, 1}, {1}, 2), LengthExceeded);
}

TEST(Skew, DirectSumOfStraightShapes) {
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= 5; ++b)
            for (auto& phi : partitions_of(a))
                for (auto& theta : partitions_of(b)) {
                    auto p = profiles(direct_sum(make_skew(phi), make_skew(theta)));
                    ASSERT_EQ(p.w, union_of(conjugate(phi), conjugate(theta)));
                    ASSERT_EQ(p.n, add(conjugate(phi), conjugate(theta)));
                }
}

TEST(Skew, VSequence) {
    auto A = S("[5,4,3,1]/[2,1]");
    auto vs = v_sequence(A);
    ASSERT_EQ(vs.strips.size(), 3u);
    EXPECT_EQ(vs.strips[0].size(), 4u);
    EXPECT_EQ(vs.strips[1].size(), 3u);
    EXPECT_EQ(vs.strips[2].size(), 3u);
    EXPECT_EQ(shape_from_cells(vs.residuals[0]), S("[4,3,2]/[2,1]"));
    EXPECT_EQ(v_sequence(S("[1,1,1]")).strips.size(), 1u);
    auto sq = v_sequence(S("[2,2]"));
    ASSERT_EQ(sq.strips.size(), 2u);
    EXPECT_EQ(sq.strips[0], (std::vector<Cell>{{0, 1}, {1, 1}}));
    EXPECT_EQ(sq.strips[1], (std::vector<Cell>{{0, 0}, {1, 0}}));
}

TEST(Skew, VSequenceMatchesRowProfile) {
    for (auto& A : enumerate_basic_shapes(9, 9, 9)) {
        auto vs = v_sequence(A);
        auto p = profiles(A);
        ASSERT_EQ(static_cast<int>(vs.strips.size()), p.n.length());
        for (int i = 0; i < p.n.length(); ++i) ASSERT_EQ(static_cast<int>(vs.strips[static_cast<std::size_t>(i)].size()), p.n[i]);
        ASSERT_GE(p.w.length(), p.n.length());
    }
}

TEST(Skew, StripMaximalBlocks) {
    auto A = S("[3,2]/[2]");
    auto B = S("[3,3,3,2]/[2]");
    auto C = S("[4,4,4,3]/[2]");
    EXPECT_EQ(strip_maximal_blocks(B).reduced, A);
    EXPECT_EQ(strip_maximal_blocks(C).reduced, A);
    auto sc = strip_maximal_blocks(C);
    EXPECT_EQ(sc.depth_strip + sc.width_strip, 3);
    EXPECT_EQ(strip_maximal_blocks(S("[8,6,6,5]/[3,1,1]")).reduced, S("[6,4,4,3]/[3,1,1]"));
    EXPECT_EQ(strip_maximal_blocks(S("[3,3,3]")).reduced.size(), 0);
    // Profiles: w(B) = 2^3 + w(A), w(C) = 4 ∪ w(B).
    EXPECT_EQ(profiles(B).w, Partition({3, 3, 3}));
    EXPECT_EQ(profiles(B).n, Partition({4, 3, 2}));
    EXPECT_EQ(profiles(C).w, Partition({4, 3, 3, 3}));
    EXPECT_EQ(profiles(C).n, Partition({4, 4, 3, 2}));
}

TEST(Skew, StripRoundTripAndProfileTransport) {
    for (auto& A : enumerate_basic_shapes(9, 6, 6)) {
        auto sr = strip_maximal_blocks(A);
        ASSERT_TRUE(sr.reduced.size() == 0 || is_basic(sr.reduced));
        ASSERT_EQ(reinsert_blocks(sr.reduced, sr.steps), A);
        auto pa = profiles(A);
        auto pr = profiles(sr.reduced);
        ASSERT_EQ(lift_through_blocks(pr.w, sr.steps), pa.w) << to_string(A);
        ASSERT_EQ(lift_through_blocks(pr.n, sr.steps), pa.n) << to_string(A);
    }
}

TEST(Skew, StripCommutesWithSymmetry) {
    for (auto& A : enumerate_basic_shapes(9, 6, 6)) {
        auto red = strip_maximal_blocks(A).reduced;
        for (auto g : {Symmetry::pi, Symmetry::conj, Symmetry::pi_conj}) {
            auto img = strip_maximal_blocks(apply_symmetry(A, g)).reduced;
            if (red.size() == 0) ASSERT_EQ(img.size(), 0);
            else ASSERT_EQ(img, apply_symmetry(red, g)) << to_string(A);
        }
    }
}

TEST(Skew, RibbonCodec) {
    auto r = parse_ribbon("ribbon:(3,2,5,2,2,7,3)");
    auto A = ribbon_shape(r);
    EXPECT_EQ(A.size(), 24);
    EXPECT_EQ(A.rows(), 24 - 6);
    EXPECT_EQ(A.cols(), 7);
    EXPECT_EQ(ribbon_codec(A), r);
    EXPECT_EQ(ribbon_shape({{5}}), S("[1,1,1,1,1]"));
    EXPECT_EQ(ribbon_shape({{1, 1, 1}}), S("[3]"));
    EXPECT_THROW(ribbon_codec(S("[2,2]")), NotRibbon);
    EXPECT_THROW(parse_ribbon("(0,1)"), ParseError);
}

TEST(Skew, RibbonCodecRoundTrip) {
    for (int s = 1; s <= 8; ++s) {
        std::vector<int> c(static_cast<std::size_t>(s), 1);
        std::function<void(int)> rec = [&](int i) {
            if (i == s) {
                RibbonComposition r{c};
                auto A = ribbon_shape(r);
                ASSERT_TRUE(shape_predicates(A).ribbon);
                ASSERT_EQ(ribbon_codec(A), r);
                return;
            }
            for (int v = 1; v <= 5; ++v) {
                c[static_cast<std::size_t>(i)] = v;
                rec(i + 1);
            }
        };
        rec(0);
    }
}

TEST(Skew, RibbonSubdiagramStats) {
    RibbonComposition r{{3, 2, 5, 2, 2, 7, 3}};
    auto all = ribbon_subdiagram_stats(r, {1, 2, 3, 4, 5, 6, 7});
    EXPECT_EQ(all.I, 6);
    EXPECT_EQ(all.vspace, 18);
    auto one = ribbon_subdiagram_stats(r, {3});
    EXPECT_EQ(one.I, 0);
    EXPECT_EQ(one.vspace, 5);
    RibbonComposition q{{6, 2, 2, 2, 2, 7, 6}};
    auto twos = ribbon_subdiagram_stats(q, {2, 3, 4, 5});
    EXPECT_EQ(twos.I, 3);
    EXPECT_EQ(twos.vspace, 5);
    EXPECT_THROW(ribbon_subdiagram_stats(q, {}), EmptySubset);
}

TEST(Skew, TextSyntax) {
    EXPECT_EQ(parse_skew("[4,4,2]/[2,1]"), make_skew({4, 4, 2}, {2, 1}));
    EXPECT_EQ(parse_skew("[3,2]"), make_skew({3, 2}));
    EXPECT_EQ(to_string(make_skew({4, 4, 2}, {2, 1})), "[4,4,2]/[2,1]");
    EXPECT_EQ(to_string(make_skew({3, 2})), "[3,2]");
    EXPECT_THROW(parse_skew("[2,2]/[3]"), ParseError);
    EXPECT_THROW(parse_skew("[2,2]/"), ParseError);
}
