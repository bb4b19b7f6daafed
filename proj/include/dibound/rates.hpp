#pragma once

#include <cmath>
#include <functional>
#include <sstream>
#include <string>

#include "bell.hpp"
#include "bounds.hpp"
#include "errors.hpp"
#include "numeric_tables.hpp"
#include "optimize.hpp"
#include "states.hpp"

namespace dibound {

inline constexpr double kDefaultGamma = 0.00033;

// Pairwise bit error rate of Z outcomes on the noisy honest state.
inline double qber(const NoiseModel& noise) {
    return noise.kind == NoiseKind::Local ? 0.5 * (1.0 - noise.p * noise.p) : 0.5 * (1.0 - noise.p);
}

// P(Z_0 != Z_party) evaluated on the depolarized state.
inline double qber_from_state(const NoiseModel& noise, int qubits, int party) {
    const ComplexMatrix rho = noise.apply(ghz_state(qubits), qubits);
    std::vector<std::optional<Observable>> obs(qubits);
    obs[0] = Observable::z();
    obs.at(party) = Observable::z();
    return 0.5 * (1.0 - correlator(rho, obs));
}

inline double beta_of_p(const BellSpec& spec, const NoiseModel& noise) {
    const ComplexMatrix rho = noise.apply(honest_state(spec), spec.parties());
    return bell_functional(spec, rho, optimal_settings(spec));
}

inline double beta_of_p_closed_form(const BellSpec& spec, const NoiseModel& noise) {
    const double p = noise.p;
    const bool local = noise.kind == NoiseKind::Local;
    switch (spec.kind) {
        case BellKind::Holz: return local ? 0.75 * (p * p * p + p * p) : 1.5 * p;
        case BellKind::ParityCHSH: return local ? (p * p * p + p * p) / std::sqrt(2.0) : std::sqrt(2.0) * p;
        case BellKind::MABK: return local ? 4.0 * p * p * p : 4.0 * p;
        case BellKind::AsymCHSH: return spec.quantum_bound * (local ? p * p : p);
    }
    throw ValidationError("beta_of_p_closed_form: unknown inequality");
}

inline PiecewiseLinear numeric_table_curve(const BellSpec& spec) {
    PiecewiseLinear c;
    if (spec.kind == BellKind::ParityCHSH) {
        c.xs.assign(tables::parity_chsh_beta.begin(), tables::parity_chsh_beta.end());
        c.ys.assign(tables::parity_chsh_value.begin(), tables::parity_chsh_value.end());
    } else if (spec.is_chsh()) {
        c.xs.assign(tables::chsh_beta.begin(), tables::chsh_beta.end());
        c.ys.assign(tables::chsh_value.begin(), tables::chsh_value.end());
    } else
        throw UnsupportedError("no numeric table for " + spec.name());
    return c;
}

// Closed-form curve where one exists, otherwise the embedded optimizer table.
inline BoundCurve bound_curve(const BellSpec& spec, Arity arity) {
    if (arity == Arity::Two && (spec.kind == BellKind::ParityCHSH || spec.is_chsh())) {
        const PiecewiseLinear table = numeric_table_curve(spec);
        const double lo = spec.local_bound, hi = spec.quantum_bound;
        BoundCurve c{spec, arity, lo, hi, false, true, {}};
        c.fn = [table, lo, hi](double b) {
            if (b > hi + 1e-9) throw DomainError("beta above the quantum bound");
            return b <= lo ? 0.0 : table(b);
        };
        return c;
    }
    return analytic_curve(spec, arity);
}

struct RateResult {
    double rate = 0.0;
    double beta_at_p = 0.0;
    std::string bound_used;
    bool conjectured = false;
    bool non_certified = false;
    double alpha = 0.0;  // asymmetric CHSH only

    std::string flags() const { return conjectured ? "conjectured" : non_certified ? "non-certified" : ""; }
};

inline RateResult dicka_rate(const BellSpec& spec, const NoiseModel& noise, bool optimize_alpha = true) {
    const double hq = binary_entropy(qber(noise));
    RateResult r;
    switch (spec.kind) {
        case BellKind::Holz:
            r.beta_at_p = beta_of_p(spec, noise);
            r.rate = holz_one_outcome(r.beta_at_p) - hq;
            r.bound_used = "holz_one_outcome";
            return r;
        case BellKind::ParityCHSH:
            r.beta_at_p = beta_of_p(spec, noise);
            r.rate = parity_chsh_one_outcome(r.beta_at_p) - hq;
            r.bound_used = "parity_chsh_one_outcome";
            return r;
        case BellKind::AsymCHSH: {
            AlphaChoice best;
            if (optimize_alpha) {
                best = best_alpha_bound([&](double a, double) { return beta_of_p(asym_chsh(a), noise); }, noise.p);
            } else {
                best.alpha = spec.alpha;
                best.bound = asym_chsh_one_outcome(beta_of_p(spec, noise), spec.alpha);
            }
            r.alpha = best.alpha;
            r.beta_at_p = beta_of_p(asym_chsh(best.alpha), noise);
            r.rate = 0.5 * (best.bound - hq);
            r.bound_used = "asym_chsh_one_outcome";
            return r;
        }
        case BellKind::MABK: break;
    }
    throw UnsupportedError("MABK cannot be used for conference key agreement");
}

inline RateResult dire_rate_spot(const BellSpec& spec, const NoiseModel& noise, double gamma = kDefaultGamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) throw DomainError("dire_rate_spot: gamma must lie in [0,1]");
    if (spec.kind == BellKind::AsymCHSH && !spec.is_chsh()) throw UnsupportedError("spot-checking DIRE uses CHSH with alpha = 1");
    const BoundCurve curve = bound_curve(spec, Arity::Two);
    RateResult r;
    r.beta_at_p = beta_of_p(spec, noise);
    r.rate = curve(r.beta_at_p) - spec.input_bits * gamma - binary_entropy(gamma);
    r.bound_used = spec.name() + "_two_outcome";
    r.conjectured = curve.conjectured;
    r.non_certified = curve.non_certified;
    return r;
}

inline RateResult dire_rate_recycled(const NoiseModel& noise) {
    RateResult r;
    r.beta_at_p = beta_of_p(chsh(), noise);
    r.rate = colbeck_recycled_two_outcome(r.beta_at_p);
    r.bound_used = "colbeck_recycled_two_outcome";
    r.conjectured = true;
    return r;
}

// Smallest p in [lo, hi] above which rate_fn(p) > 0, by bisection on the sign.
template <typename F>
double threshold_p(F&& rate_fn, double lo = 0.0, double hi = 1.0, double tol = 1e-11) {
    const double rlo = rate_fn(lo), rhi = rate_fn(hi);
    if (!(rhi > 0.0) || rlo > 0.0) {
        std::ostringstream os;
        os << "threshold_p: no sign change, rate(" << lo << ") = " << rlo << ", rate(" << hi << ") = " << rhi;
        throw NumericError(os.str());
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (rate_fn(mid) > 0.0) hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

enum class RateKind { Dicka, DireSpot, DireRecycled };

inline RateKind rate_kind_from_name(const std::string& s) {
    if (s == "dicka") return RateKind::Dicka;
    if (s == "spot" || s == "dire") return RateKind::DireSpot;
    if (s == "recycled") return RateKind::DireRecycled;
    throw ValidationError("unknown rate '" + s + "'");
}

inline RateResult rate_at(RateKind kind, const BellSpec& spec, const NoiseModel& noise, double gamma = kDefaultGamma,
                          bool optimize_alpha = true) {
    switch (kind) {
        case RateKind::Dicka: return dicka_rate(spec, noise, optimize_alpha);
        case RateKind::DireSpot: return dire_rate_spot(spec, noise, gamma);
        case RateKind::DireRecycled: return dire_rate_recycled(noise);
    }
    throw ValidationError("unknown rate");
}

}  // namespace dibound
