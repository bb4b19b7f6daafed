#include <gtest/gtest.h>

#include <random>

#include "dibound/bell.hpp"
#include "dibound/verify.hpp"

using namespace dibound;

namespace {

MeasurementSettings generic_settings(int parties) {
    MeasurementSettings m{{{Observable::xz(0.3), Observable::xz(1.1)}, {Observable::xz(-0.4), Observable::xz(2.0)}}};
    if (parties == 3) m.parties.push_back({Observable::xz(0.9), Observable::xz(-1.3)});
    return m;
}

}  // namespace

TEST(Bell, QuantumBoundsAtOptimalSettings) {
    for (const BellSpec& s : {holz(), parity_chsh(), mabk(), asym_chsh(0.5), chsh(), asym_chsh(2.0)})
        EXPECT_NEAR(bell_value(s, honest_state(s), optimal_settings(s)).beta, s.quantum_bound, 1e-9) << s.name();
    EXPECT_NEAR(chsh().quantum_bound, 2.0 * std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(asym_chsh(2.0).local_bound, 4.0, 1e-15);
}

TEST(Bell, GenericSettingsMatchReference) {
    const ComplexMatrix r3 = depolarize_local(ghz_state(3), 0.9, 3);
    const MeasurementSettings s3 = generic_settings(3);
    EXPECT_NEAR(bell_functional(holz(), r3, s3), -0.76549696638937248, 1e-12);
    EXPECT_NEAR(bell_functional(mabk(), r3, s3), 0.60533613863407021, 1e-12);
    MeasurementSettings sp = s3;
    sp.parties[2][1] = sp.parties[2][0];
    EXPECT_NEAR(bell_functional(parity_chsh(), r3, sp), -0.13511409596312576, 1e-12);
    const ComplexMatrix r2 = depolarize_local(ghz_state(2), 0.85, 2);
    EXPECT_NEAR(bell_functional(asym_chsh(0.7), r2, generic_settings(2)), -0.076349740641471708, 1e-12);
    EXPECT_NEAR(asym_chsh_compact(0.7, r2, generic_settings(2)), -0.076349740641471708, 1e-12);
    EXPECT_NEAR(bell_functional(holz(), r3, optimal_settings(holz())), 1.15425, 1e-12);
}

TEST(Bell, ReducedHolzValueAgreesWithFullEvaluation) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> ang(-pi, pi);
    for (int n = 0; n < 100; ++n) {
        const BlockDiagState st = random_block_state(rng, 1.0);
        const double b0 = ang(rng), a1 = ang(rng), cm = ang(rng);
        const double full = bell_functional(holz(), st.to_matrix(), holz_frame_settings(b0, a1, cm));
        EXPECT_NEAR(holz_reduced_value(st, b0, a1, cm), full, 1e-12);
    }
}

TEST(Bell, VbarDominatesRandomFreeAngles) {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> ang(-pi, pi);
    const BlockDiagState st = random_block_state(rng, 4.0);
    const double b0 = 1.1;
    const double vbar = holz_vbar(st, b0);
    const HolzFreeAngles best = holz_vbar_argmax(st.correlators(), b0);
    EXPECT_NEAR(holz_reduced_value(st, b0, best.a1, best.c_minus), vbar, 1e-12);
    for (int n = 0; n < 1000; ++n) EXPECT_LE(holz_reduced_value(st, b0, ang(rng), ang(rng)), vbar + 1e-12);
}

TEST(Bell, ParityVbarAgreesWithFullEvaluation) {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> ang(-pi, pi);
    for (int n = 0; n < 100; ++n) {
        const BlockDiagState st = random_block_state(rng, 1.0);
        const double b0 = ang(rng);
        const double a1 = parity_vbar_argmax_a1(st.correlators(), b0);
        const double full = bell_functional(parity_chsh(), st.to_matrix(), parity_frame_settings(b0, a1));
        EXPECT_NEAR(parity_vbar(st, b0), full, 1e-12);
    }
}

TEST(Bell, NoisyValuesFollowClosedForms) {
    for (double p : {0.5, 0.8, 0.95}) {
        auto b = [p](const BellSpec& s, NoiseKind k) {
            return bell_functional(s, NoiseModel{k, p}.apply(honest_state(s), s.parties()), optimal_settings(s));
        };
        EXPECT_NEAR(b(holz(), NoiseKind::Local), 0.75 * (p * p * p + p * p), 1e-12);
        EXPECT_NEAR(b(holz(), NoiseKind::Global), 1.5 * p, 1e-12);
        EXPECT_NEAR(b(parity_chsh(), NoiseKind::Local), (p * p * p + p * p) / std::sqrt(2.0), 1e-12);
        EXPECT_NEAR(b(mabk(), NoiseKind::Local), 4.0 * p * p * p, 1e-12);
        EXPECT_NEAR(b(mabk(), NoiseKind::Global), 4.0 * p, 1e-12);
        EXPECT_NEAR(b(chsh(), NoiseKind::Local), 2.0 * std::sqrt(2.0) * p * p, 1e-12);
        EXPECT_NEAR(b(asym_chsh(1.7), NoiseKind::Local), 2.0 * std::sqrt(1.0 + 1.7 * 1.7) * p * p, 1e-12);
    }
}

TEST(Bell, RandomValuesStayWithinQuantumBounds) {
    const CheckResult r = check_tsirelson(5, 600);
    EXPECT_TRUE(r.passed) << r.max_deviation;
}

TEST(Bell, CorrelatorInequalitiesOnSmallSamples) {
    EXPECT_TRUE(check_xxx_inequality(6, 500).passed);
    EXPECT_TRUE(check_xy_inequalities(7, 500).passed);
}

TEST(Bell, RejectsMismatchedInputs) {
    EXPECT_THROW(bell_functional(holz(), ghz_state(2), optimal_settings(holz())), ValidationError);
    EXPECT_THROW(bell_functional(chsh(), ghz_state(2), optimal_settings(holz())), ValidationError);
    EXPECT_THROW(bell_spec_from_name("bell"), ValidationError);
    EXPECT_THROW(asym_chsh(std::nan("")), ValidationError);
}
