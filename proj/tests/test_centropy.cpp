#include <gtest/gtest.h>

#include <random>

#include "dibound/centropy.hpp"
#include "dibound/verify.hpp"

using namespace dibound;

TEST(Centropy, ReferenceValuesOnNoisyGhz) {
    const ComplexMatrix r = depolarize_local(ghz_state(3), 0.9, 3);
    EXPECT_NEAR(cond_entropy(r, 3, {0}, {Observable::z()}), 0.52817942897077264, 1e-10);
    EXPECT_NEAR(cond_entropy(r, 3, {0, 1}, {Observable::z(), Observable::xz(2 * pi / 3)}), 1.0290204094018185, 1e-10);
    EXPECT_NEAR(cond_entropy(r, 3, {0, 2}, {Observable::xz(0.3), Observable::xz(0.9)}), 0.97818718564881579, 1e-10);
}

TEST(Centropy, PureGhz) {
    const ComplexMatrix g = ghz_state(3);
    EXPECT_NEAR(cond_entropy(g, 3, {0}, {Observable::z()}), 1.0, 1e-12);
    EXPECT_NEAR(cond_entropy(g, 3, {0, 1}, {Observable::z(), Observable::xz(pi / 4)}), 1.6008760366928556, 1e-10);
    // pure state: H(outcomes|E) = H(outcomes)
    EXPECT_NEAR(cond_entropy(g, 3, {0, 1}, {Observable::z(), Observable::z()}), 1.0, 1e-12);
}

TEST(Centropy, TauFamily) {
    EXPECT_NEAR(cond_entropy(tau_state(0.75).to_matrix(), 3, {0}, {Observable::z()}), 0.18872187554086683, 1e-12);
    for (double nu : {0.5, 0.6, 0.9, 1.0})
        EXPECT_NEAR(cond_entropy(tau_state(nu).to_matrix(), 3, {0}, {Observable::z()}), 1.0 - binary_entropy(nu), 1e-9);
}

TEST(Centropy, RoutesAgreeOnRandomStates) {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ang(-pi, pi);
    for (int n = 0; n < 100; ++n) {
        const ComplexMatrix r = random_density(rng, 8);
        const std::vector<Observable> obs{Observable::xz(ang(rng)), Observable::xy(ang(rng))};
        EXPECT_NEAR(cond_entropy(r, 3, {2, 0}, obs), cond_entropy_fast(r, 3, {2, 0}, obs), 1e-9);
    }
    for (int n = 0; n < 100; ++n) {
        const BlockDiagState st = random_block_state(rng, 2.0);
        const double b0 = ang(rng);
        const ComplexMatrix m = st.to_matrix();
        EXPECT_NEAR(block_entropy_ab(st, b0), cond_entropy(m, 3, {0, 1}, {Observable::z(), Observable::xz(b0)}), 1e-9);
        EXPECT_NEAR(block_entropy_a(st), cond_entropy(m, 3, {0}, {Observable::z()}), 1e-9);
    }
}

TEST(Centropy, BellDiagonalClosedForm) {
    const std::array<double, 4> lam{0.7, 0.1, 0.15, 0.05};
    const ComplexMatrix rho = bell_diagonal_state(lam);
    const double closed = bell_diagonal_ab_entropy(lam, 0.4, 0.9);
    EXPECT_NEAR(closed, 0.65448589082384689, 1e-12);
    EXPECT_NEAR(cond_entropy(rho, 2, {0, 1}, {Observable::xy(0.4), Observable::xy(0.9)}), closed, 1e-10);
}

TEST(Centropy, DataProcessingBounds) {
    std::mt19937_64 rng(32);
    std::uniform_real_distribution<double> ang(-pi, pi);
    for (int n = 0; n < 200; ++n) {
        const ComplexMatrix r = random_density(rng, 8);
        const Observable a = Observable::xz(ang(rng)), b = Observable::xz(ang(rng));
        const double ha = cond_entropy(r, 3, {0}, {a});
        const double hab = cond_entropy(r, 3, {0, 1}, {a, b});
        EXPECT_GE(hab, ha - 1.0 - 1e-9);
        EXPECT_GE(hab, -1e-9);
        EXPECT_LE(ha, 1.0 + 1e-9);
    }
}

TEST(Centropy, UncertaintyRelation) {
    const CheckResult r = check_uncertainty_relation(33, 1000);
    EXPECT_TRUE(r.passed) << r.max_deviation;
}

TEST(Centropy, PurificationReproducesState) {
    std::mt19937_64 rng(34);
    const ComplexMatrix r = random_density(rng, 4);
    const Purification p = purify(r);
    EXPECT_LT(p.system_marginal().max_abs_diff(r), 1e-10);
    const CqDecomposition cq = cq_decompose(r, 2, {0}, {Observable::z()});
    EXPECT_NEAR(cq.outcome_probs[0] + cq.outcome_probs[1], 1.0, 1e-12);
    EXPECT_NEAR(cq.outcome_probs[0], r(0, 0).real() + r(1, 1).real(), 1e-10);
}

TEST(Centropy, ValidatesInputs) {
    const ComplexMatrix g = ghz_state(3);
    EXPECT_THROW(cond_entropy(g, 3, {3}, {Observable::z()}), IndexError);
    EXPECT_THROW(cond_entropy(g, 3, {0, 0}, {Observable::z(), Observable::z()}), ValidationError);
    EXPECT_THROW(cond_entropy(g, 3, {0}, {}), ValidationError);
    EXPECT_THROW(cond_entropy(g * cplx(2.0), 3, {0}, {Observable::z()}), ValidationError);
}
