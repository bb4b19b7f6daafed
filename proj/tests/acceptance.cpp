// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "dibound/bell.hpp"
#include "dibound/bounds.hpp"
#include "dibound/centropy.hpp"
#include "dibound/optimize.hpp"
#include "dibound/rates.hpp"
#include "dibound/verify.hpp"

using namespace dibound;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string num(double x, int digits = 10) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, x);
    return buf;
}

int failures = 0;

template <typename F>
void criterion(int id, const char* title, double budget_s, F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        body(o);
    } catch (const std::exception& e) {
        o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(secs < budget_s, "runtime " + num(secs, 3) + " s over budget " + num(budget_s, 3) + " s");
    if (!o.ok) ++failures;
    std::printf("%s criterion %d: %s [%.2f s]%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs, o.detail.empty() ? "" : " -- ",
                o.detail.c_str());
    std::fflush(stdout);
}

void near(Outcome& o, const std::string& what, double got, double want, double tol) {
    o.require(std::abs(got - want) <= tol, what + " = " + num(got) + ", expected " + num(want) + " +- " + num(tol, 2));
}

double dicka_threshold(const BellSpec& s, NoiseKind k) {
    return threshold_p([&](double p) { return dicka_rate(s, NoiseModel{k, p}).rate; });
}

double dire_threshold(const BellSpec& s, NoiseKind k) {
    return threshold_p([&](double p) { return dire_rate_spot(s, NoiseModel{k, p}, 0.0).rate; });
}

}  // namespace

int main() {
    const double r2 = std::sqrt(2.0);

    criterion(1, "quantum bounds at optimal settings", 1.0, [](Outcome& o) {
        const std::vector<std::pair<BellSpec, double>> cases{{holz(), 1.5},
                                                             {parity_chsh(), std::sqrt(2.0)},
                                                             {mabk(), 4.0},
                                                             {asym_chsh(0.5), 2.0 * std::sqrt(1.25)},
                                                             {asym_chsh(1.0), 2.0 * std::sqrt(2.0)},
                                                             {asym_chsh(2.0), 2.0 * std::sqrt(5.0)}};
        for (const auto& [s, want] : cases)
            near(o, s.name() + "(" + num(s.alpha, 3) + ")", bell_value(s, honest_state(s), optimal_settings(s)).beta, want, 1e-9);
    });

    criterion(2, "DICKA thresholds", 30.0, [](Outcome& o) {
        near(o, "holz local", dicka_threshold(holz(), NoiseKind::Local), 0.934, 1e-3);
        near(o, "holz global", dicka_threshold(holz(), NoiseKind::Global), 0.855, 1e-3);
        near(o, "parity-chsh local", dicka_threshold(parity_chsh(), NoiseKind::Local), 0.936, 1e-3);
        near(o, "parity-chsh global", dicka_threshold(parity_chsh(), NoiseKind::Global), 0.858, 1e-3);
        near(o, "asym-chsh local", dicka_threshold(asym_chsh(1.0), NoiseKind::Local), 0.923, 1e-3);
        near(o, "asym-chsh global", dicka_threshold(asym_chsh(1.0), NoiseKind::Global), 0.852, 1e-3);
    });

    criterion(3, "DIRE thresholds at gamma = 0", 60.0, [](Outcome& o) {
        const double mabk_l = dire_threshold(mabk(), NoiseKind::Local), mabk_g = dire_threshold(mabk(), NoiseKind::Global);
        const double par_l = dire_threshold(parity_chsh(), NoiseKind::Local), par_g = dire_threshold(parity_chsh(), NoiseKind::Global);
        const double holz_l = dire_threshold(holz(), NoiseKind::Local), holz_g = dire_threshold(holz(), NoiseKind::Global);
        const double chsh_l = dire_threshold(chsh(), NoiseKind::Local), chsh_g = dire_threshold(chsh(), NoiseKind::Global);
        near(o, "mabk local", mabk_l, 0.794, 1e-3);
        near(o, "mabk global", mabk_g, 0.500, 1e-3);
        near(o, "parity-chsh local", par_l, 0.870, 1e-3);
        near(o, "parity-chsh global", par_g, 0.707, 1e-3);
        near(o, "holz local", holz_l, 0.849, 1e-3);
        near(o, "holz global", holz_g, 0.667, 1e-3);
        near(o, "chsh local", chsh_l, 0.841, 1e-3);
        near(o, "chsh global", chsh_g, 0.707, 1e-3);
        near(o, "mabk local exact", mabk_l, std::pow(2.0, -1.0 / 3.0), 1e-6);
        near(o, "mabk global exact", mabk_g, 0.5, 1e-6);
        near(o, "holz global exact", holz_g, 2.0 / 3.0, 1e-6);
        near(o, "chsh local exact", chsh_l, std::pow(2.0, -0.25), 1e-6);
        near(o, "chsh global exact", chsh_g, 1.0 / std::sqrt(2.0), 1e-6);
        near(o, "parity-chsh global exact", par_g, 1.0 / std::sqrt(2.0), 1e-6);
    });

    criterion(4, "tightness sweeps over nu in [1/2, 1]", 10.0, [](Outcome& o) {
        double e_state = 0.0, e_holz = 0.0, e_par = 0.0;
        for (int i = 0; i < 50; ++i) {
            const double nu = 0.5 + 0.5 * i / 49.0, want = 1.0 - binary_entropy(nu);
            e_state = std::max(e_state, std::abs(cond_entropy(tau_state(nu).to_matrix(), 3, {0}, {Observable::z()}) - want));
            e_holz = std::max(e_holz, std::abs(holz_one_outcome(2.0 * nu + 1.0 / (2.0 * nu) - 1.0) - want));
            e_par = std::max(e_par, std::abs(parity_chsh_one_outcome(std::sqrt((2 * nu - 1) * (2 * nu - 1) + 1.0)) - want));
        }
        o.require(e_state <= 1e-9, "cond_entropy error " + num(e_state));
        o.require(e_holz <= 1e-9, "holz bound error " + num(e_holz));
        o.require(e_par <= 1e-9, "parity-chsh bound error " + num(e_par));
    });

    criterion(5, "internal constants beta*_H and beta*_C", 5.0, [](Outcome& o) {
        near(o, "beta*_H", solve_beta_star_holz(), 1.49, 0.01);
        near(o, "beta*_C", solve_beta_star_colbeck(), 2.75, 0.01);
    });

    criterion(6, "optimizer endpoints and agreement with the two-outcome conjecture", 600.0, [r2](Outcome& o) {
        OptConfig cfg;
        cfg.restarts = 64;
        cfg.seed = 1;
        near(o, "chsh at 2 sqrt2", minimize_chsh_two_outcome(2.0 * r2, cfg).entropy, 1.0 + binary_entropy(0.5 + r2 / 4.0), 2e-3);
        std::vector<double> grid;
        for (int i = 0; i < 6; ++i) grid.push_back(1.0 + (r2 - 1.0) * i / 5.0);
        for (int i = 0; i < 4; ++i) grid.push_back(1.495 + 0.005 * i / 3.0);
        for (double b : grid) near(o, "holz at " + num(b, 6), minimize_holz_two_outcome(b, cfg).entropy, holz_two_outcome(b), 2e-3);
        double worst = 1e9;
        for (int i = 0; i < 30; ++i) {
            const double b = 1.0 + 0.5 * i / 29.0;
            worst = std::min(worst, minimize_holz_two_outcome(b, cfg).entropy - holz_two_outcome(b));
        }
        o.require(worst >= -2e-3, "numeric curve dips " + num(-worst) + " below the conjecture");
    });

    criterion(7, "property suites on 10^4 random samples", 120.0, [](Outcome& o) {
        std::uniform_real_distribution<double> ang(-pi, pi);
        {
            // |<XXX>| against the Holz value on block-diagonal states
            std::mt19937_64 rng(101);
            long n = 0, draws = 0;
            double worst = -1.0;
            while (n < 10000 && ++draws < 10000000) {
                const BlockDiagState st = random_block_state(rng);
                const double beta = holz_reduced_value(st, ang(rng), ang(rng), ang(rng));
                if (beta <= 1.0) continue;
                ++n;
                const double rhs = beta / 2.0 - 0.5 + 0.5 * std::sqrt(beta * beta + 2.0 * beta - 3.0);
                worst = std::max(worst, rhs - std::abs(st.correlators().xxx));
            }
            o.require(n == 10000, "only " + std::to_string(n) + " violating samples");
            o.require(worst <= 1e-9, "<XXX> inequality violated by " + num(worst));
        }
        {
            std::mt19937_64 rng(102);
            const Observable X = Observable::x(), Y = Observable::y();
            double worst = -1.0;
            for (int n = 0; n < 10000; ++n) {
                const ComplexMatrix rho = random_density(rng, 8);
                auto e = [&](const Observable& a, const Observable& b, const Observable& c) { return correlator(rho, {a, b, c}); };
                worst = std::max({worst, std::pow(e(X, X, X), 2) + std::pow(e(X, X, Y), 2) - 1.0,
                                  std::pow(e(X, Y, Y), 2) + std::pow(e(X, Y, X), 2) - 1.0});
            }
            o.require(worst <= 1e-9, "X/Y correlator inequality violated by " + num(worst));
        }
        {
            std::mt19937_64 rng(103);
            double worst = -1.0;
            for (int n = 0; n < 10000; ++n) {
                const BlockDiagState st = random_block_state(rng, n % 2 ? 4.0 : 1.0);
                const double rhs = 1.0 - binary_entropy(0.5 * (1.0 + std::abs(st.correlators().xxx)));
                worst = std::max(worst, rhs - cond_entropy(st.to_matrix(), 3, {0}, {Observable::z()}));
            }
            o.require(worst <= 1e-9, "uncertainty relation violated by " + num(worst));
        }
    });

    criterion(8, "bound curves convex, monotone, pinned at both ends", 30.0, [](Outcome& o) {
        struct Case {
            BoundCurve c;
            double top;
        };
        const std::vector<Case> cases{{analytic_curve(holz(), Arity::One), 1.0},
                                      {analytic_curve(parity_chsh(), Arity::One), 1.0},
                                      {analytic_curve(mabk(), Arity::One), 1.0},
                                      {analytic_curve(chsh(), Arity::One), 1.0},
                                      {analytic_curve(asym_chsh(0.5), Arity::One), 1.0},
                                      {analytic_curve(asym_chsh(2.0), Arity::One), 1.0},
                                      {analytic_curve(holz(), Arity::Two), 1.0 + binary_entropy(0.25)},
                                      {analytic_curve(mabk(), Arity::Two), 2.0},
                                      {analytic_curve(chsh(), Arity::RecycledTwo), 1.6009}};
        for (const auto& [c, top] : cases) {
            const std::string name = c.spec.name() + (c.spec.kind == BellKind::AsymCHSH ? "(" + num(c.spec.alpha, 2) + ")" : "") +
                                     (c.arity == Arity::One ? " one-outcome" : c.arity == Arity::Two ? " two-outcome" : " recycled");
            std::vector<double> v(200);
            for (int i = 0; i < 200; ++i) v[i] = c(i == 199 ? c.hi : c.lo + (c.hi - c.lo) * i / 199.0);
            double mono = 0.0, conv = 0.0;
            for (int i = 1; i < 200; ++i) mono = std::min(mono, v[i] - v[i - 1]);
            for (int i = 1; i < 199; ++i) conv = std::min(conv, v[i + 1] - 2.0 * v[i] + v[i - 1]);
            o.require(mono >= 0.0, name + " decreases by " + num(-mono));
            o.require(conv >= -1e-7, name + " second difference " + num(conv));
            o.require(std::abs(v.front()) <= 1e-12, name + " at classical bound " + num(v.front()));
            o.require(std::abs(v.back() - top) <= 1e-4, name + " at quantum bound " + num(v.back()));
            o.require(*std::max_element(v.begin(), v.end()) == v.back(), name + " not maximal at quantum bound");
        }
    });

    std::printf("%s: %d criterion(s) failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
