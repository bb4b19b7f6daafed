#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "bell.hpp"
#include "bounds.hpp"
#include "centropy.hpp"
#include "optimize.hpp"
#include "states.hpp"

namespace dibound {

struct CheckResult {
    std::string name;
    bool passed = true;
    double max_deviation = 0.0;  // largest violation (or error) seen
    long samples = 0;
};

// Haar-ish mixed state: G G^dagger / tr with complex Gaussian G.
inline ComplexMatrix random_density(std::mt19937_64& rng, std::size_t dim) {
    std::normal_distribution<double> n;
    ComplexMatrix g(dim);
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) g(i, j) = cplx(n(rng), n(rng));
    ComplexMatrix r = g * g.dagger();
    return r * cplx(1.0 / r.trace().real());
}

// Block-diagonal state with weights skewed towards purity so that Bell violations are common.
inline BlockDiagState random_block_state(std::mt19937_64& rng, double skew = 4.0) {
    std::uniform_real_distribution<double> u(0.0, 1.0), ang(-pi, pi);
    BlockDiagState::Weights w{};
    double s = 0.0;
    for (double& x : w) s += (x = std::pow(u(rng), skew));
    for (double& x : w) x /= s;
    BlockDiagState::Angles t{};
    for (double& x : t) x = ang(rng);
    return BlockDiagState::from_eigen(w, t);
}

inline CheckResult check_quantum_bounds() {
    CheckResult r{"quantum bounds at optimal settings"};
    for (const BellSpec& s : {holz(), parity_chsh(), mabk(), asym_chsh(0.5), asym_chsh(1.0), asym_chsh(2.0)}) {
        const double b = bell_functional(s, honest_state(s), optimal_settings(s));
        r.max_deviation = std::max(r.max_deviation, std::abs(b - s.quantum_bound));
        ++r.samples;
    }
    r.passed = r.max_deviation <= 1e-9;
    return r;
}

inline CheckResult check_tightness(BellKind kind, int points = 50) {
    std::vector<double> nus;
    for (int i = 0; i < points; ++i) nus.push_back(0.5 + 0.5 * i / (points - 1));
    const TightnessReport rep = verify_tightness(kind, nus);
    return {std::string("tightness family, ") + (kind == BellKind::Holz ? "holz" : "parity-chsh"), rep.passed,
            rep.max_error, points};
}

// Monotone, convex, zero at the classical bound, maximal at the quantum bound.
inline CheckResult check_curve_shape(const BoundCurve& c, double expected_max, int points = 200) {
    CheckResult r{c.spec.name() + (c.arity == Arity::One ? " one-outcome" : c.arity == Arity::Two ? " two-outcome" : " recycled") +
                  " shape"};
    std::vector<double> v(points);
    const double h = (c.hi - c.lo) / (points - 1);
    for (int i = 0; i < points; ++i) v[i] = c(i == points - 1 ? c.hi : c.lo + h * i);
    auto worse = [&r](double d) { r.max_deviation = std::max(r.max_deviation, d); };
    for (int i = 1; i < points; ++i) worse(v[i - 1] - v[i]);
    for (int i = 1; i + 1 < points; ++i) worse(-(v[i + 1] - 2.0 * v[i] + v[i - 1]) - 1e-7 + 1e-9);
    worse(std::abs(v.front()) - 1e-9);
    worse(std::abs(v.back() - expected_max) - 1e-4 + 1e-9);
    r.samples = points;
    r.passed = r.max_deviation <= 1e-9;
    return r;
}

// |<XXX>| >= beta/2 - 1/2 + sqrt(beta^2 + 2 beta - 3)/2 whenever the Holz value exceeds 1.
inline CheckResult check_xxx_inequality(std::uint64_t seed, long samples = 10000) {
    CheckResult r{"holz value vs <XXX>"};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(-pi, pi);
    for (long draws = 0; r.samples < samples && draws < 1000 * samples; ++draws) {
        const BlockDiagState st = random_block_state(rng);
        const double b0 = ang(rng), a1 = ang(rng), cm = ang(rng);
        const double beta = holz_reduced_value(st, b0, a1, cm);
        if (beta <= 1.0) continue;
        const double rhs = 0.5 * beta - 0.5 + 0.5 * std::sqrt(beta * beta + 2.0 * beta - 3.0);
        r.max_deviation = std::max(r.max_deviation, rhs - std::abs(st.correlators().xxx));
        ++r.samples;
    }
    r.passed = r.samples == samples && r.max_deviation <= 1e-9;
    return r;
}

// <XXX>^2 + <XXY>^2 <= 1 and <XYY>^2 + <XYX>^2 <= 1 on arbitrary three-qubit states.
inline CheckResult check_xy_inequalities(std::uint64_t seed, long samples = 10000) {
    CheckResult r{"three-qubit X/Y correlator inequalities"};
    std::mt19937_64 rng(seed);
    const Observable X = Observable::x(), Y = Observable::y();
    for (; r.samples < samples; ++r.samples) {
        const ComplexMatrix rho = random_density(rng, 8);
        auto e = [&](const Observable& a, const Observable& b, const Observable& c) { return correlator(rho, {a, b, c}); };
        const double l1 = std::pow(e(X, X, X), 2) + std::pow(e(X, X, Y), 2);
        const double l2 = std::pow(e(X, Y, Y), 2) + std::pow(e(X, Y, X), 2);
        r.max_deviation = std::max({r.max_deviation, l1 - 1.0, l2 - 1.0});
    }
    r.passed = r.max_deviation <= 1e-9;
    return r;
}

// H(Z|E) >= 1 - h((1 + |<XXX>|)/2).
inline CheckResult check_uncertainty_relation(std::uint64_t seed, long samples = 10000) {
    CheckResult r{"uncertainty relation H(Z|E)"};
    std::mt19937_64 rng(seed);
    for (; r.samples < samples; ++r.samples) {
        const BlockDiagState st = random_block_state(rng, r.samples % 2 ? 4.0 : 1.0);
        const double lhs = block_entropy_a(st);
        const double rhs = 1.0 - binary_entropy(0.5 * (1.0 + std::abs(st.correlators().xxx)));
        r.max_deviation = std::max(r.max_deviation, rhs - lhs);
    }
    r.passed = r.max_deviation <= 1e-9;
    return r;
}

// |beta| never exceeds the quantum bound for random states and XZ-plane settings.
inline CheckResult check_tsirelson(std::uint64_t seed, long samples = 2000) {
    CheckResult r{"bell values within quantum bounds"};
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ang(-pi, pi);
    const std::vector<BellSpec> specs{holz(), parity_chsh(), mabk(), asym_chsh(0.5), chsh(), asym_chsh(2.0)};
    for (; r.samples < samples; ++r.samples) {
        const BellSpec& s = specs[r.samples % specs.size()];
        const ComplexMatrix rho = random_density(rng, std::size_t{1} << s.parties());
        MeasurementSettings m;
        for (int k = 0; k < s.parties(); ++k) m.parties.push_back({Observable::xz(ang(rng)), Observable::xz(ang(rng))});
        r.max_deviation = std::max(r.max_deviation, std::abs(bell_functional(s, rho, m)) - s.quantum_bound);
    }
    r.passed = r.max_deviation <= 1e-9;
    return r;
}

inline std::vector<CheckResult> run_all_checks(std::uint64_t seed = 1) {
    std::vector<CheckResult> out;
    out.push_back(check_quantum_bounds());
    out.push_back(check_tightness(BellKind::Holz));
    out.push_back(check_tightness(BellKind::ParityCHSH));
    out.push_back(check_curve_shape(analytic_curve(holz(), Arity::One), 1.0));
    out.push_back(check_curve_shape(analytic_curve(parity_chsh(), Arity::One), 1.0));
    out.push_back(check_curve_shape(analytic_curve(mabk(), Arity::One), 1.0));
    out.push_back(check_curve_shape(analytic_curve(chsh(), Arity::One), 1.0));
    out.push_back(check_curve_shape(analytic_curve(holz(), Arity::Two), 1.0 + binary_entropy(0.25)));
    out.push_back(check_curve_shape(analytic_curve(mabk(), Arity::Two), 2.0));
    out.push_back(check_curve_shape(analytic_curve(chsh(), Arity::RecycledTwo), colbeck_g1(2.0 * std::sqrt(2.0))));
    out.push_back(check_xxx_inequality(seed));
    out.push_back(check_xy_inequalities(seed + 1));
    out.push_back(check_uncertainty_relation(seed + 2));
    out.push_back(check_tsirelson(seed + 3));
    return out;
}

}  // namespace dibound
