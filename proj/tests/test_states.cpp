#include <gtest/gtest.h>

#include <random>

#include "dibound/states.hpp"
#include "dibound/verify.hpp"

using namespace dibound;

TEST(States, LocalDepolarizedGhzEntries) {
    const ComplexMatrix r = depolarize_local(ghz_state(3), 0.8, 3);
    EXPECT_NEAR(r(0, 0).real(), 0.365, 1e-14);
    EXPECT_NEAR(r(0, 7).real(), 0.256, 1e-14);
    EXPECT_NEAR(r(1, 1).real(), 0.045, 1e-14);
    EXPECT_NEAR(r(3, 3).real(), 0.045, 1e-14);
    EXPECT_NEAR(von_neumann_entropy(r), 1.9833347436974706, 1e-11);
    EXPECT_NEAR(depolarize_global(ghz_state(3), 0.8)(1, 1).real(), 0.025, 1e-15);
}

TEST(States, NoiseEndpoints) {
    const ComplexMatrix g = ghz_state(3);
    EXPECT_LT(depolarize_local(g, 1.0, 3).max_abs_diff(g), 1e-15);
    EXPECT_LT(depolarize_local(g, 0.0, 3).max_abs_diff(ComplexMatrix::identity(8) * cplx(0.125)), 1e-15);
    EXPECT_LT(depolarize_global(g, 0.0).max_abs_diff(ComplexMatrix::identity(8) * cplx(0.125)), 1e-15);
    EXPECT_THROW(depolarize_local(g, 1.2, 3), DomainError);
    EXPECT_THROW(NoiseModel(NoiseKind::Global, -0.1), DomainError);
    EXPECT_THROW(noise_kind_from_name("white"), ValidationError);
}

TEST(States, LocalNoiseComposes) {
    std::mt19937_64 rng(2);
    const ComplexMatrix r = random_density(rng, 8);
    const ComplexMatrix twice = depolarize_local(depolarize_local(r, 0.9, 3), 0.7, 3);
    EXPECT_LT(twice.max_abs_diff(depolarize_local(r, 0.63, 3)), 1e-14);
}

TEST(States, GhzBasisIsOrthonormal) {
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            const auto u = ghz_basis_vector(a >> 2, (a >> 1) & 1, a & 1);
            const auto v = ghz_basis_vector(b >> 2, (b >> 1) & 1, b & 1);
            cplx ip = 0.0;
            for (int i = 0; i < 8; ++i) ip += std::conj(u[i]) * v[i];
            EXPECT_NEAR(std::abs(ip), a == b ? 1.0 : 0.0, 1e-15);
        }
    EXPECT_LT(ghz_basis_state(0, 0, 0).max_abs_diff(ghz_state(3)), 1e-15);
}

TEST(States, BlockStateStructure) {
    std::mt19937_64 rng(9);
    const ComplexMatrix zz = kron_all(std::vector<ComplexMatrix>{ComplexMatrix::identity(2), pauli_z(), pauli_z()});
    for (int n = 0; n < 200; ++n) {
        const BlockDiagState st = random_block_state(rng, 1.0);
        const ComplexMatrix m = st.to_matrix();
        EXPECT_NEAR(m.trace().real(), 1.0, 1e-12);
        EXPECT_LT((m * zz).max_abs_diff(zz * m), 1e-12);
        for (double x : eigvals_hermitian(m)) EXPECT_GE(x, -1e-12);
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                // a block couples |xjk> only with |x'jk> and |x' jbar kbar>
                const bool allowed = ((i ^ j) & 3) == 0 || ((i ^ j) & 3) == 3;
                if (!allowed) EXPECT_LT(std::abs(m(i, j)), 1e-12) << i << "," << j;
            }
    }
}

TEST(States, LambdaRoundTrip) {
    std::mt19937_64 rng(4);
    for (int n = 0; n < 100; ++n) {
        const BlockDiagState st = random_block_state(rng, 1.0);
        BlockDiagState::Angles r{};
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) r[BlockDiagState::blk(j, k)] = st.r(j, k);
        const BlockDiagState back = BlockDiagState::from_lambda(st.lambdas(), r);
        EXPECT_LT(back.to_matrix().max_abs_diff(st.to_matrix()), 1e-12);
    }
}

TEST(States, BlockStateRejectsBadWeights) {
    EXPECT_THROW(BlockDiagState::from_eigen({0.5, 0.6, 0, 0, 0, 0, 0, 0}, {}), ValidationError);
    EXPECT_THROW(BlockDiagState::from_eigen({1.1, -0.1, 0, 0, 0, 0, 0, 0}, {}), ValidationError);
}

TEST(States, TauStateSpectrum) {
    const BlockDiagState t = tau_state(0.75);
    const ComplexMatrix m = t.to_matrix();
    EXPECT_NEAR(m(0, 0).real(), 0.5, 1e-15);
    EXPECT_NEAR(m(0, 7).real(), 0.25, 1e-15);
    EXPECT_NEAR(t.entropy(), binary_entropy(0.75), 1e-14);
    EXPECT_THROW(tau_state(0.4), DomainError);
}

TEST(States, ObservablesAreInvolutions) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> a(-pi, pi);
    for (int n = 0; n < 50; ++n)
        for (const Observable& o : {Observable::xz(a(rng)), Observable::xy(a(rng))}) {
            const ComplexMatrix m = o.matrix();
            EXPECT_LT((m * m).max_abs_diff(ComplexMatrix::identity(2)), 1e-12);
        }
    EXPECT_LT(Observable::x().matrix().max_abs_diff(pauli_x()), 1e-15);
    EXPECT_LT(Observable::y().matrix().max_abs_diff(pauli_y()), 1e-15);
}
