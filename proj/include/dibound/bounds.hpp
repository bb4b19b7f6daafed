#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <utility>

#include "errors.hpp"
#include "inequality.hpp"
#include "qmath.hpp"
#include "roots.hpp"

namespace dibound {

namespace detail {

inline double checked_beta(double beta, double upper, const char* what) {
    if (std::isnan(beta)) throw DomainError(std::string(what) + ": beta is NaN");
    if (beta > upper + 1e-9) throw DomainError(std::string(what) + ": beta above the quantum bound");
    return std::min(beta, upper);
}

inline double sqrt0(double x) { return std::sqrt(std::max(x, 0.0)); }

inline double h_clamped(double x) { return binary_entropy(std::clamp(x, 0.0, 1.0)); }

inline double shannon4(double a, double b) {
    // H({a, a, b, b})
    return -2.0 * (xlog2x(std::max(a, 0.0)) + xlog2x(std::max(b, 0.0)));
}

}  // namespace detail

inline double holz_one_outcome(double beta) {
    beta = detail::checked_beta(beta, 1.5, "holz_one_outcome");
    if (beta <= 1.0) return 0.0;
    return 1.0 - detail::h_clamped(0.25 * (beta + 1.0 + detail::sqrt0(beta * beta + 2.0 * beta - 3.0)));
}

inline double parity_chsh_one_outcome(double beta) {
    beta = detail::checked_beta(beta, std::sqrt(2.0), "parity_chsh_one_outcome");
    if (beta <= 1.0) return 0.0;
    return 1.0 - detail::h_clamped(0.5 + 0.5 * detail::sqrt0(beta * beta - 1.0));
}

inline double mabk_one_outcome(double beta) {
    beta = detail::checked_beta(beta, 4.0, "mabk_one_outcome");
    if (beta <= 2.0) return 0.0;
    return 1.0 - detail::h_clamped(0.5 + 0.5 * detail::sqrt0(beta * beta / 8.0 - 1.0));
}

inline double mabk_f(double beta) { return 0.25 - std::sqrt(3.0) / 24.0 * detail::sqrt0(beta * beta - 4.0); }

inline double mabk_two_outcome(double beta) {
    beta = detail::checked_beta(beta, 4.0, "mabk_two_outcome");
    if (beta <= 2.0) return 0.0;
    const double f = mabk_f(beta);
    return 2.0 - shannon_entropy(ProbabilityVector{1.0 - 3.0 * f, f, f, f});
}

// ---- Holz two-outcome machinery ----

inline double holz_eta(double beta) {
    const double s = detail::sqrt0(beta * beta - 1.0);
    return 2.0 - detail::shannon4(0.25 * (1.0 + s), 0.25 * (1.0 - s));
}

struct ThetaTerms {
    double q1, q2, r;
};

inline ThetaTerms holz_theta_terms(double beta, double x) {
    const double d = beta - 1.0;
    return {(beta * (2.0 - beta) - x * x) / (8.0 * d), (d * (beta + 3.0) + x * x - 1.0) / (8.0 * d),
            (2.0 * (1.0 - x) - (beta - x) * (beta - x)) / (4.0 * x * d)};
}

inline double holz_theta(double beta, double x) {
    const ThetaTerms t = holz_theta_terms(beta, x);
    return detail::shannon4(t.q1, t.q2) - detail::h_clamped(t.r);
}

inline double holz_theta_dx(double beta, double x) {
    const double d = beta - 1.0;
    const ThetaTerms t = holz_theta_terms(beta, x);
    const double n = 2.0 * (1.0 - x) - (beta - x) * (beta - x);
    const double dn = -2.0 + 2.0 * (beta - x);
    const double dr = (dn * x - n) / (4.0 * x * x * d);
    return x / (2.0 * d) * std::log2(t.q1 / t.q2) - std::log2((1.0 - t.r) / t.r) * dr;
}

inline double holz_theta_dbeta(double beta, double x) {
    const double d = beta - 1.0;
    const ThetaTerms t = holz_theta_terms(beta, x);
    const double dq1 = ((2.0 - 2.0 * beta) * d - (beta * (2.0 - beta) - x * x)) / (8.0 * d * d);
    const double n = 2.0 * (1.0 - x) - (beta - x) * (beta - x);
    const double dr = (-2.0 * (beta - x) * d - n) / (4.0 * x * d * d);
    return -2.0 * dq1 * std::log2(t.q1 / t.q2) - std::log2((1.0 - t.r) / t.r) * dr;
}

// Admissible x: r in [0, 1] and q1 >= 0.
inline std::pair<double, double> holz_x_interval(double beta) {
    const double w = detail::sqrt0(3.0 - 2.0 * beta);
    const double lo = std::max(0.0, beta - 1.0 - w);
    const double hi = std::min(beta - 1.0 + w, detail::sqrt0(beta * (2.0 - beta)));
    return {lo, hi};
}

inline double solve_x(double beta) {
    if (!(beta > std::sqrt(2.0) && beta <= 1.5 + 1e-12)) throw DomainError("solve_x: beta must lie in (sqrt2, 3/2]");
    const auto [lo, hi] = holz_x_interval(std::min(beta, 1.5));
    const double w = hi - lo;
    if (w < 1e-12) return 0.5 * (lo + hi);
    auto f = [beta](double x) { return holz_theta_dx(beta, x); };
    return scan_and_solve(f, lo + 1e-9 * w, hi - 1e-9 * w, "solve_x", 1000, 1e-15);
}

// Left side of the printed transcendental equation, with log|.|.
inline double x_sol_residual(double beta, double x) {
    const double b2 = beta * beta, x2 = x * x, x3 = x2 * x;
    auto L = [](double v) { return std::log(std::abs(v)); };
    const double a1 = -b2 - 2.0 * beta * x - x2 + 2.0 * x + 2.0;
    const double a2 = b2 - 2.0 * beta * x + x2 + 2.0 * x - 2.0;
    const double a3 = b2 + 2.0 * beta + x2 - 4.0;
    const double a4 = -b2 + 2.0 * beta - x2;
    return (b2 - x2 - 2.0) * L(a1) + (x2 + 2.0) * L(a2) + 2.0 * x3 * L(a3) - b2 * L(a2) - 2.0 * x3 * L(a4);
}

inline double holz_theta_opt(double beta) { return holz_theta(beta, solve_x(beta)); }

inline double holz_theta_opt_slope(double beta) { return holz_theta_dbeta(beta, solve_x(beta)); }

// Tangency residual of the line through (sqrt2, 1).
inline double holz_tangency_residual(double beta) {
    const double x = solve_x(beta);
    return holz_theta_dbeta(beta, x) * (beta - std::sqrt(2.0)) - (holz_theta(beta, x) - 1.0);
}

inline double solve_beta_star_holz() {
    return scan_and_solve(holz_tangency_residual, std::sqrt(2.0) + 1e-4, 1.5 - 1e-6, "solve_beta_star_holz", 1000, 1e-14);
}

inline double beta_star_holz() {
    static const double value = solve_beta_star_holz();
    return value;
}

inline double holz_tangent_slope() {
    static const double value = (holz_theta_opt(beta_star_holz()) - 1.0) / (beta_star_holz() - std::sqrt(2.0));
    return value;
}

inline double holz_two_outcome(double beta) {
    beta = detail::checked_beta(beta, 1.5, "holz_two_outcome");
    if (beta <= 1.0) return 0.0;
    const double r2 = std::sqrt(2.0);
    if (beta <= r2) return holz_eta(beta);
    if (beta <= beta_star_holz()) return 1.0 + holz_tangent_slope() * (beta - r2);
    return holz_theta_opt(beta);
}

// ---- asymmetric CHSH ----

inline double asym_g(double x, double alpha) {
    return 1.0 - detail::h_clamped(0.5 + 0.5 * detail::sqrt0(x * x / 4.0 - alpha * alpha));
}

inline double asym_g_prime(double x, double alpha) {
    const double s = detail::sqrt0(x * x / 4.0 - alpha * alpha);
    const double u = 0.5 + 0.5 * s;
    if (u >= 1.0) return std::numeric_limits<double>::infinity();
    if (s <= 0.0) return std::numeric_limits<double>::quiet_NaN();
    return -binary_entropy_derivative(u) * x / (8.0 * s);
}

inline double asym_beta_star(double alpha) {
    const double a = std::abs(alpha);
    if (!(a > 0.0 && a < 1.0)) throw DomainError("asym_beta_star: requires 0 < |alpha| < 1");
    const double q = 2.0 * std::sqrt(1.0 + a * a);
    auto f = [a](double x) { return asym_g_prime(x, a) * (x - 2.0) - asym_g(x, a); };
    return find_root(f, 2.0, q, 1e-13);
}

inline double asym_chsh_one_outcome(double beta, double alpha) {
    const double a = std::abs(alpha);
    const double q = 2.0 * std::sqrt(1.0 + a * a);
    beta = detail::checked_beta(beta, q, "asym_chsh_one_outcome");
    if (a == 0.0) return 0.0;
    if (a < 1.0) {
        if (beta <= 2.0) return 0.0;
        const double bs = asym_beta_star(a);
        if (beta < bs) return asym_g_prime(bs, a) * (beta - 2.0);
        return asym_g(beta, a);
    }
    if (beta <= 2.0 * a) return 0.0;
    return asym_g(beta, a);
}

struct AlphaChoice {
    double alpha = 1.0;
    double bound = 0.0;
};

// Maximize the one-outcome bound over alpha in [0, 4]; beta_fn(alpha, p) is the achievable value.
template <typename F>
AlphaChoice best_alpha_bound(F&& beta_fn, double p) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("best_alpha_bound: p must lie in [0,1]");
    auto value = [&](double a) {
        const double q = 2.0 * std::sqrt(1.0 + a * a);
        return asym_chsh_one_outcome(std::min(beta_fn(a, p), q), a);
    };
    const int n = 400;
    AlphaChoice best{0.0, value(0.0)};
    int best_i = 0;
    for (int i = 1; i <= n; ++i) {
        const double a = 4.0 * i / n;
        const double v = value(a);
        if (v > best.bound) {
            best = {a, v};
            best_i = i;
        }
    }
    if (best.bound <= 0.0) return best;
    const double lo = 4.0 * std::max(best_i - 1, 0) / n, hi = 4.0 * std::min(best_i + 1, n) / n;
    const auto [a, v] = golden_max(value, lo, hi, 1e-10);
    if (v > best.bound) best = {a, v};
    return best;
}

// ---- CHSH with recycled inputs ----

inline double colbeck_g1(double x) {
    return 1.0 + detail::h_clamped(0.5 + x / 8.0) - 2.0 * detail::h_clamped(0.5 + std::sqrt(2.0) * x / 8.0);
}

inline double colbeck_g1_prime(double x) {
    const double u2 = 0.5 + std::sqrt(2.0) * x / 8.0;
    if (u2 >= 1.0) return std::numeric_limits<double>::infinity();
    return binary_entropy_derivative(0.5 + x / 8.0) / 8.0 - 2.0 * std::sqrt(2.0) / 8.0 * binary_entropy_derivative(u2);
}

inline double solve_beta_star_colbeck() {
    auto f = [](double x) { return colbeck_g1_prime(x) * (x - 2.0) - colbeck_g1(x); };
    return find_root(f, 2.0, 2.0 * std::sqrt(2.0), 1e-13);
}

inline double beta_star_colbeck() {
    static const double value = solve_beta_star_colbeck();
    return value;
}

inline double colbeck_recycled_two_outcome(double beta) {
    beta = detail::checked_beta(beta, 2.0 * std::sqrt(2.0), "colbeck_recycled_two_outcome");
    if (beta <= 2.0) return 0.0;
    const double bs = beta_star_colbeck();
    if (beta <= bs) return colbeck_g1_prime(bs) * (beta - 2.0);
    return colbeck_g1(beta);
}

// ---- curves ----

enum class Arity { One, Two, RecycledTwo };

struct BoundCurve {
    BellSpec spec;
    Arity arity = Arity::One;
    double lo = 0.0;  // classical bound
    double hi = 0.0;  // quantum bound
    bool conjectured = false;
    bool non_certified = false;
    std::function<double(double)> fn;

    double operator()(double beta) const { return fn(beta); }
    std::string flags() const { return conjectured ? "conjectured" : non_certified ? "non-certified" : ""; }
};

inline BoundCurve analytic_curve(const BellSpec& spec, Arity arity) {
    BoundCurve c{spec, arity, spec.local_bound, spec.quantum_bound, false, false, {}};
    switch (spec.kind) {
        case BellKind::Holz:
            if (arity == Arity::One) c.fn = holz_one_outcome;
            else if (arity == Arity::Two) {
                c.fn = holz_two_outcome;
                c.conjectured = true;
            }
            break;
        case BellKind::ParityCHSH:
            if (arity == Arity::One) c.fn = parity_chsh_one_outcome;
            break;
        case BellKind::MABK:
            if (arity == Arity::One) c.fn = mabk_one_outcome;
            else if (arity == Arity::Two) c.fn = mabk_two_outcome;
            break;
        case BellKind::AsymCHSH:
            if (arity == Arity::One) {
                const double a = spec.alpha;
                c.fn = [a](double b) { return asym_chsh_one_outcome(b, a); };
            } else if (arity == Arity::RecycledTwo && spec.is_chsh()) {
                c.fn = colbeck_recycled_two_outcome;
                c.conjectured = true;
            }
            break;
    }
    if (!c.fn) throw UnsupportedError("no closed-form bound for " + spec.name() + " at this outcome arity");
    return c;
}

}  // namespace dibound
