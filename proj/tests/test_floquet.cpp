#include <gtest/gtest.h>

#include <random>

#include "hypfloquet/derive.hpp"
#include "hypfloquet/floquet.hpp"
#include "oracles/brute_force.hpp"

using namespace hypfloquet;

namespace {

SurfaceComplex incenter_fp(int g, bool o) {
    int p = o ? 4 * g : 2 * g;
    return incenter_complex(fundamental_polygon(g, o), p, p);
}

oracle::Pauli64 to64(const PauliOperator &p) {
    oracle::Pauli64 out;
    for (size_t q = 0; q < p.num_qubits(); q++) {
        char t = p.get(q);
        if (t == 'X' || t == 'Y') {
            out.x |= uint64_t{1} << q;
        }
        if (t == 'Z' || t == 'Y') {
            out.z |= uint64_t{1} << q;
        }
    }
    return out;
}

std::vector<oracle::Pauli64> to64(const std::vector<PauliOperator> &ps) {
    std::vector<oracle::Pauli64> out;
    for (const auto &p : ps) {
        out.push_back(to64(p));
    }
    return out;
}

}  // namespace

TEST(Schedule, RejectsShortRuns) {
    auto c = incenter_fp(2, true);
    EXPECT_THROW(run_schedule(three_color(c), 5), DomainError);
}

class SmallCodes : public testing::TestWithParam<std::pair<int, bool>> {};

TEST_P(SmallCodes, PeriodThreeSteadyState) {
    auto [g, o] = GetParam();
    auto c = incenter_fp(g, o);
    auto a = three_color(c);
    auto traj = run_schedule(a, 12);
    ASSERT_TRUE(traj.steady_round);
    EXPECT_LE(*traj.steady_round + 3, 9);
    int s = *traj.steady_round;
    for (int r = s; r + 3 < 12; r++) {
        EXPECT_EQ(traj.isg[r], traj.isg[r + 3]) << r;
    }
    // ranks never decrease
    auto ranks = traj.ranks();
    for (size_t r = 1; r < ranks.size(); r++) {
        EXPECT_GE(ranks[r], ranks[r - 1]);
    }
    for (const auto &isg : traj.isg) {
        EXPECT_TRUE(isg.is_abelian());
    }
    // the steady groups contain every face stabilizer and the last round's checks
    auto phases = traj.steady_phases();
    for (int ph = 0; ph < 3; ph++) {
        for (int f = 0; f < c.num_faces(); f++) {
            EXPECT_TRUE(phases[ph]->contains(face_stabilizer(c, a, f)));
        }
        for (const auto &ch : checks_for_round(a, traj.phase_round(ph))) {
            EXPECT_TRUE(phases[ph]->contains(check_operator(a, ch)));
        }
        EXPECT_EQ(static_cast<int64_t>(logical_count(*phases[ph])), k_rule(g, o));
    }
}

TEST_P(SmallCodes, PrunedSearchMatchesBruteForce) {
    auto [g, o] = GetParam();
    auto c = incenter_fp(g, o);
    auto a = three_color(c);
    auto traj = run_schedule(a, 12);
    auto phases = traj.steady_phases();
    int n = a.num_qubits;
    int best = 1 << 30;
    for (int ph = 0; ph < 3; ph++) {
        auto local = local_generators(c, a, *phases[ph], traj.phase_round(ph));
        auto hit = min_logical_weight(*phases[ph], local, 6, 1);
        ASSERT_TRUE(hit);
        EXPECT_TRUE(phases[ph]->commutes_with(hit->op));
        EXPECT_FALSE(phases[ph]->contains(hit->op));
        EXPECT_EQ(static_cast<int>(hit->op.weight()), hit->weight);
        if (n <= 12) {
            auto brute = oracle::min_logical_weight(n, to64(phases[ph]->generators()));
            ASSERT_TRUE(brute);
            EXPECT_EQ(hit->weight, *brute) << "phase " << ph;
        }
        best = std::min(best, hit->weight);
    }
    auto w = exact_distance(c, a, traj);
    EXPECT_EQ(w.weight, best);
    EXPECT_EQ(w.weight, 2);
}

INSTANTIATE_TEST_SUITE_P(FundamentalPolygons, SmallCodes,
                         testing::Values(std::pair{2, true}, std::pair{3, false}, std::pair{4, false},
                                         std::pair{5, false}),
                         [](const auto &info) {
                             return std::string(info.param.second ? "orientable" : "nonorientable") +
                                    std::to_string(info.param.first);
                         });

TEST(Search, RandomGroupsMatchBruteForce) {
    // random abelian groups of 2- and 3-body generators on up to 10 qubits
    std::mt19937 rng(2024);
    const char *labels = "XYZ";
    int compared = 0;
    for (int trial = 0; trial < 60; trial++) {
        int n = 4 + static_cast<int>(rng() % 7);
        std::vector<PauliOperator> gens;
        for (int attempt = 0; attempt < 40 && static_cast<int>(gens.size()) < n - 1; attempt++) {
            PauliOperator p(n);
            int w = 2 + static_cast<int>(rng() % 2);
            for (int i = 0; i < w; i++) {
                p.set(rng() % n, labels[rng() % 3]);
            }
            bool ok = !p.is_identity();
            for (const auto &q : gens) {
                ok = ok && p.commutes(q);
            }
            if (ok) {
                gens.push_back(p);
            }
        }
        StabilizerGroup isg(n);
        for (const auto &p : gens) {
            isg.add(p);
        }
        auto brute = oracle::min_logical_weight(n, to64(gens));
        auto hit = min_logical_weight(isg, gens, n, 1);
        ASSERT_EQ(brute.has_value(), hit.has_value()) << trial;
        if (brute) {
            EXPECT_EQ(hit->weight, *brute) << trial;
            compared++;
        }
    }
    EXPECT_GT(compared, 40);
}

TEST(Search, RejectsNonGeneratingSet) {
    StabilizerGroup isg(3);
    isg.add(PauliOperator::from_string("XXI"));
    isg.add(PauliOperator::from_string("IZZ"));
    std::vector<PauliOperator> local{PauliOperator::from_string("XXI")};
    EXPECT_THROW(min_logical_weight(isg, local, 3), std::invalid_argument);
}

TEST(Search, ThreadCountDoesNotChangeWitness) {
    auto c = incenter_fp(2, true);
    auto a = three_color(c);
    auto traj = run_schedule(a, 12);
    LogicalSearchOptions one, four;
    one.threads = 1;
    four.threads = 4;
    auto w1 = exact_distance(c, a, traj, one);
    auto w4 = exact_distance(c, a, traj, four);
    EXPECT_EQ(w1.weight, w4.weight);
    EXPECT_EQ(w1.op, w4.op);
    EXPECT_EQ(w1.phase, w4.phase);
}

TEST(Search, BoundsAreEnforced) {
    auto c = incenter_fp(2, true);
    auto a = three_color(c);
    auto traj = run_schedule(a, 12);
    LogicalSearchOptions small;
    small.max_qubits = 8;
    EXPECT_THROW(exact_distance(c, a, traj, small), DistanceBoundExceeded);
    LogicalSearchOptions light;
    light.max_weight = 1;
    try {
        exact_distance(c, a, traj, light);
        FAIL();
    } catch (const DistanceBoundExceeded &e) {
        EXPECT_NE(std::string(e.what()).find("geometric estimator"), std::string::npos);
    }
}

TEST(CodeParams, KRule) {
    EXPECT_EQ(k_rule(2, true), 4);
    EXPECT_EQ(k_rule(7, false), 7);
}

TEST(CodeParams, ModesAndProvenance) {
    auto exact = code_params(SemiRegularSig(4, 16, 16), 2, true, DistanceMode::exact);
    EXPECT_EQ(exact.n, 16);
    EXPECT_EQ(exact.k, 4);
    EXPECT_EQ(exact.d, 2);
    EXPECT_EQ(exact.d_source, "exact");

    auto autom = code_params(SemiRegularSig(6, 6, 8), 2, true, DistanceMode::automatic);
    EXPECT_EQ(autom.n, 48);
    EXPECT_EQ(autom.d_source, "geometric");
    EXPECT_EQ(autom.d, 4);

    EXPECT_THROW(code_params(SemiRegularSig(6, 6, 8), 2, true, DistanceMode::exact), DistanceBoundExceeded);
    EXPECT_THROW(code_params(SemiRegularSig(6, 6, 10), 3, false, DistanceMode::geometric), DomainError);

    auto nonor = code_params(SemiRegularSig(12, 12, 4), 3, false, DistanceMode::automatic);
    EXPECT_EQ(nonor.n, 12);
    EXPECT_EQ(nonor.k, 3);
    EXPECT_EQ(nonor.d, 2);
    EXPECT_EQ(nonor.d_source, "exact");
    EXPECT_DOUBLE_EQ(nonor.k_n(), 0.25);
    EXPECT_DOUBLE_EQ(nonor.kd2_n(), 1.0);
}
