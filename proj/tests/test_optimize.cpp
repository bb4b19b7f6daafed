#include <gtest/gtest.h>

#include "dibound/bounds.hpp"
#include "dibound/optimize.hpp"
#include "dibound/rates.hpp"

using namespace dibound;

namespace {

OptConfig quick(int restarts = 16) {
    OptConfig c;
    c.restarts = restarts;
    c.seed = 7;
    return c;
}

const double kEndpoint = 1.0 + binary_entropy(0.5 + std::sqrt(2.0) / 4.0);

}  // namespace

TEST(Optimize, SeedStreamIsSplitmix) {
    EXPECT_EQ(splitmix64(0), 16294208416658607535ULL);
    EXPECT_EQ(splitmix64(1), 10451216379200822465ULL);
    EXPECT_EQ(restart_seed(1, 5), 12773366489153039575ULL);
}

TEST(Optimize, HolzMatchesConjectureOutsideTheLinearPiece) {
    for (double b : {1.2, 1.5}) {
        const OptResult r = minimize_holz_two_outcome(b, quick());
        EXPECT_NEAR(r.entropy, holz_two_outcome(b), 2e-3) << b;
        EXPECT_GE(r.achieved_beta, b - 1e-7);
        EXPECT_EQ(r.argmin.size(), r.names.size());
        EXPECT_NEAR(block_argmin_bell_value(holz(), r.argmin), r.achieved_beta, 1e-9);
    }
}

TEST(Optimize, HolzNeverBelowConjecture) {
    const double b = 1.45;
    EXPECT_GE(minimize_holz_two_outcome(b, quick()).entropy, holz_two_outcome(b) - 2e-3);
}

TEST(Optimize, EndpointsOfParityAndChsh) {
    EXPECT_NEAR(minimize_chsh_two_outcome(2.0 * std::sqrt(2.0), quick()).entropy, kEndpoint, 2e-3);
    EXPECT_NEAR(minimize_parity_two_outcome(std::sqrt(2.0), quick()).entropy, kEndpoint, 2e-3);
    EXPECT_NEAR(minimize_chsh_two_outcome(2.0, quick(4)).entropy, 0.0, 1e-6);
}

TEST(Optimize, DeterministicForFixedSeed) {
    const OptResult a = minimize_parity_two_outcome(1.2, quick(8));
    const OptResult b = minimize_parity_two_outcome(1.2, quick(8));
    EXPECT_EQ(a.entropy, b.entropy);
    EXPECT_EQ(a.argmin, b.argmin);
}

TEST(Optimize, ThreadCountDoesNotChangeResult) {
    OptConfig one = quick(6), many = quick(6);
    one.threads = 1;
    many.threads = 3;
    EXPECT_EQ(minimize_holz_two_outcome(1.3, one).entropy, minimize_holz_two_outcome(1.3, many).entropy);
}

TEST(Optimize, RejectsBadConfig) {
    OptConfig c = quick();
    c.restarts = 0;
    EXPECT_THROW(minimize_holz_two_outcome(1.2, c), ValidationError);
    EXPECT_THROW(minimize_two_outcome(mabk(), 3.0, quick()), UnsupportedError);
}

TEST(Optimize, ConvexHullAndInterpolation) {
    const PiecewiseLinear h = convex_hull_lower({{0, 0}, {1, 2}, {2, 1}, {3, 3}, {4, 6}});
    EXPECT_EQ(h.xs, (std::vector<double>{0, 2, 3, 4}));
    EXPECT_DOUBLE_EQ(h(1.0), 0.5);
    EXPECT_DOUBLE_EQ(h(3.5), 4.5);
    EXPECT_DOUBLE_EQ(h(-1.0), 0.0);
    EXPECT_DOUBLE_EQ(h(9.0), 6.0);
    EXPECT_THROW(convex_hull_lower({{0, 0}, {1, 1}}), ValidationError);
    EXPECT_THROW(convex_hull_lower({{0, 0}, {2, 1}, {1, 1}}), ValidationError);
}

TEST(Optimize, EmbeddedTablesAreMonotoneConvexAndPinned) {
    for (const BellSpec& s : {parity_chsh(), chsh()}) {
        const PiecewiseLinear t = numeric_table_curve(s);
        ASSERT_EQ(t.xs.size(), 200u);
        EXPECT_EQ(t.ys.front(), 0.0);
        EXPECT_NEAR(t.xs.front(), s.local_bound, 1e-15);
        EXPECT_NEAR(t.xs.back(), s.quantum_bound, 1e-15);
        EXPECT_NEAR(t.ys.back(), kEndpoint, 2e-3);
        for (std::size_t i = 1; i < t.ys.size(); ++i) EXPECT_GE(t.ys[i], t.ys[i - 1]);
        for (std::size_t i = 1; i + 1 < t.ys.size(); ++i) {
            const double s1 = (t.ys[i] - t.ys[i - 1]) / (t.xs[i] - t.xs[i - 1]);
            const double s2 = (t.ys[i + 1] - t.ys[i]) / (t.xs[i + 1] - t.xs[i]);
            EXPECT_GE(s2, s1 - 1e-9);
        }
        EXPECT_GT(t.ys[1], 0.0);
    }
}

TEST(Optimize, TightnessReport) {
    const TightnessReport r = verify_tightness(BellKind::Holz, {0.5, 0.7, 0.9, 1.0});
    EXPECT_TRUE(r.passed);
    EXPECT_EQ(r.rows.size(), 4u);
    EXPECT_THROW(verify_tightness(BellKind::MABK, {0.6}), UnsupportedError);
}
