#include <gtest/gtest.h>

#include "hypfloquet/derive.hpp"

using namespace hypfloquet;

TEST(Counting, DirectFormula) {
    auto c = semiregular_counts_direct(SemiRegularSig(6, 6, 8), -2);
    ASSERT_TRUE(c);
    EXPECT_EQ(c->n_v, 48);
    EXPECT_EQ(c->n_e, 72);
    EXPECT_EQ(c->face_census.at(6), 16);
    EXPECT_EQ(c->face_census.at(8), 6);
    EXPECT_EQ(c->n_f, 22);
    EXPECT_EQ(c->n_v - c->n_e + c->n_f, -2);

    auto big = semiregular_counts_direct(SemiRegularSig(4, 6, 14), -8);
    ASSERT_TRUE(big);
    EXPECT_EQ(big->n_v, 672);

    // [4,6,14] on genus 3 would need n = 336 with 336/14 = 24 tetradecagons: fine;
    // [6,6,10] at chi = -1 gives n = 15, not even.
    EXPECT_FALSE(semiregular_counts_direct(SemiRegularSig(6, 6, 10), -1));
}

TEST(Counting, ConservesEulerCharacteristic) {
    for (int chi = -12; chi <= -1; chi++) {
        for (int a = 4; a <= 40; a += 2) {
            for (int b = a; b <= 40; b += 2) {
                for (int c = b; c <= 80; c += 2) {
                    std::array<int, 3> m{a, b, c};
                    if (!vertex_type_admissible(m)) {
                        continue;
                    }
                    auto counts = semiregular_counts_direct(SemiRegularSig(m), chi);
                    if (!counts) {
                        continue;
                    }
                    EXPECT_EQ(counts->n_v - counts->n_e + counts->n_f, chi);
                    // n (sum 1/m - 1/2) = chi exactly
                    EXPECT_EQ(Rational{counts->n_v} * (reciprocal_sum(m) - Rational{1, 2}), Rational{chi});
                }
            }
        }
    }
}

TEST(Counting, ClipAndIncenterAgreeWithDirect) {
    struct Case {
        int p, q, chi;
    };
    for (auto [p, q, chi] : {Case{8, 8, -2}, Case{8, 3, -2}, Case{6, 6, -1}, Case{8, 4, -2}, Case{12, 12, -4},
                             Case{10, 10, -3}, Case{3, 8, -2}}) {
        SCOPED_TRACE(std::to_string(p) + "," + std::to_string(q));
        auto clip = clip_counts(p, q, chi);
        auto direct = semiregular_counts_direct(clip.signature, chi);
        ASSERT_TRUE(direct);
        EXPECT_EQ(clip.n_v, direct->n_v);
        EXPECT_EQ(clip.n_e, direct->n_e);
        EXPECT_EQ(clip.n_f, direct->n_f);
        EXPECT_EQ(clip.face_census, direct->face_census);
        EXPECT_EQ(clip.n_v - clip.n_e + clip.n_f, chi);

        auto inc = incenter_counts(p, q, chi);
        auto d2 = semiregular_counts_direct(inc.signature, chi);
        ASSERT_TRUE(d2);
        EXPECT_EQ(inc.n_v, d2->n_v);
        EXPECT_EQ(inc.face_census, d2->face_census);
        EXPECT_EQ(inc.n_v - inc.n_e + inc.n_f, chi);
    }
    EXPECT_THROW(clip_counts(7, 7, -2), DomainError);
    EXPECT_THROW(incenter_counts(4, 4, -2), DomainError);
}

TEST(Counting, ClipOfThreeEight) {
    // {8,4} clipped gives [16,16,4] on genus 2
    auto c = clip_counts(8, 4, -2);
    EXPECT_EQ(c.signature.sorted(), SemiRegularSig(4, 16, 16));
    EXPECT_EQ(c.n_v, 16);
}

namespace {

void expect_trivalent_signature(const SurfaceComplex &c, SemiRegularSig sig) {
    for (int d : c.vertex_degrees()) {
        EXPECT_EQ(d, 3);
    }
    auto counts = semiregular_counts_direct(sig, euler_characteristic(c));
    ASSERT_TRUE(counts);
    EXPECT_EQ(c.num_vertices(), counts->n_v);
    EXPECT_EQ(c.num_edges(), counts->n_e);
    EXPECT_EQ(c.num_faces(), counts->n_f);
    auto census = c.face_census();
    for (const auto &[m, k] : counts->face_census) {
        EXPECT_EQ(census[m], k) << m;
    }
}

}  // namespace

class DerivationOnFundamentalPolygon : public testing::TestWithParam<std::pair<int, bool>> {};

TEST_P(DerivationOnFundamentalPolygon, ConservesTopology) {
    auto [g, orientable] = GetParam();
    auto base = fundamental_polygon(g, orientable);
    int p = orientable ? 4 * g : 2 * g;
    int chi = euler_characteristic(g, orientable);

    auto inc = incenter_complex(base, p, p);
    EXPECT_EQ(euler_characteristic(inc), chi);
    EXPECT_EQ(inc.genus(), g);
    EXPECT_EQ(inc.orientable(), orientable);
    EXPECT_EQ(check_orientability(inc), orientable);
    expect_trivalent_signature(inc, SemiRegularSig(4, 2 * p, 2 * p));
    auto ic = incenter_counts(p, p, chi);
    EXPECT_EQ(inc.num_vertices(), ic.n_v);

    auto clip = clip_complex(base, p, p);
    EXPECT_EQ(euler_characteristic(clip), chi);
    EXPECT_EQ(check_orientability(clip), orientable);
    expect_trivalent_signature(clip, SemiRegularSig(2 * p, 2 * p, p));
    EXPECT_EQ(clip.num_vertices(), clip_counts(p, p, chi).n_v);
}

INSTANTIATE_TEST_SUITE_P(TwentySurfaces, DerivationOnFundamentalPolygon,
                         testing::Values(std::pair{2, true}, std::pair{3, true}, std::pair{4, true},
                                         std::pair{5, true}, std::pair{6, true}, std::pair{7, true},
                                         std::pair{8, true}, std::pair{9, true}, std::pair{10, true},
                                         std::pair{11, true}, std::pair{3, false}, std::pair{4, false},
                                         std::pair{5, false}, std::pair{6, false}, std::pair{7, false},
                                         std::pair{8, false}, std::pair{9, false}, std::pair{10, false},
                                         std::pair{11, false}, std::pair{12, false}),
                         [](const auto &info) {
                             return std::string(info.param.second ? "orientable" : "nonorientable") +
                                    std::to_string(info.param.first);
                         });

TEST(Derivation, RejectsWrongSource) {
    auto base = fundamental_polygon(2, true);
    EXPECT_THROW(incenter_complex(base, 6, 6), DomainError);
    EXPECT_THROW(clip_complex(base, 8, 3), DomainError);
    EXPECT_THROW(incenter_complex(base, 4, 4), DomainError);
}

TEST(Derivation, IncenterOfDualIsIsomorphic) {
    // incenter subdivision treats faces and vertices symmetrically
    auto base = fundamental_polygon(2, true);
    EXPECT_TRUE(is_isomorphic(incenter_complex(base, 8, 8), incenter_complex(dual(base), 8, 8)));
}

TEST(ExplicitComplex, Availability) {
    EXPECT_TRUE(explicit_complex(SemiRegularSig(4, 16, 16), 2, true));
    EXPECT_TRUE(explicit_complex(SemiRegularSig(16, 4, 16), 2, true));
    EXPECT_TRUE(explicit_complex(SemiRegularSig(12, 12, 4), 3, false));
    EXPECT_FALSE(explicit_complex(SemiRegularSig(6, 6, 8), 2, true));
    EXPECT_FALSE(explicit_complex(SemiRegularSig(4, 16, 16), 4, true));
    EXPECT_FALSE(explicit_complex(SemiRegularSig(4, 16, 16), 1, true));
}
