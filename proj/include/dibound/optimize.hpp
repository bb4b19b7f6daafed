#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <ostream>
#include <iomanip>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "bell.hpp"
#include "bounds.hpp"
#include "centropy.hpp"
#include "errors.hpp"
#include "inequality.hpp"
#include "states.hpp"

namespace dibound {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Seed of restart `index` under user seed `seed`.
inline std::uint64_t restart_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(splitmix64(seed) ^ index); }

struct OptConfig {
    int restarts = 64;
    std::uint64_t seed = 1;
    unsigned threads = 0;  // 0: hardware concurrency
    double penalty = 1e3;
    double radius = 0.3;
    double radius_floor = 1e-9;
    double feasibility_tol = 1e-9;
    int max_outer = 60;
};

struct OptResult {
    double entropy = 0.0;
    std::vector<double> argmin;
    std::vector<std::string> names;
    double achieved_beta = 0.0;
    bool converged = false;
    int restarts_used = 0;
};

// A constrained problem min f(z) s.t. v(z) >= target (or == target).
struct OptProblem {
    BellSpec ineq;
    double beta_target = 0.0;
    bool equality = false;
    bool alternate_active = false;  // odd restarts treat an inequality as active
    std::vector<std::string> names;
    int weight_count = 0;  // leading variables mapped onto the simplex by squaring
    std::function<double(const std::vector<double>&)> objective;
    std::function<double(const std::vector<double>&)> bell;
    std::function<void(std::vector<double>&)> canonicalize;  // value-preserving
};

namespace detail {

// Hooke-Jeeves pattern search with halving radius.
template <typename F>
double pattern_search(F&& f, std::vector<double>& x, double radius, double floor, const std::function<void(std::vector<double>&)>& canon,
                      long max_evals = 400000) {
    const std::size_t n = x.size();
    double fx = f(x);
    long evals = 1;
    std::vector<double> step(n, radius);
    auto explore = [&](std::vector<double>& base, double& fb) {
        for (std::size_t i = 0; i < n; ++i) {
            const double xi = base[i];
            base[i] = xi + step[i];
            double ft = f(base);
            ++evals;
            if (ft < fb) {
                fb = ft;
                continue;
            }
            base[i] = xi - step[i];
            ft = f(base);
            ++evals;
            if (ft < fb) {
                fb = ft;
                step[i] = -step[i];
                continue;
            }
            base[i] = xi;
        }
    };
    double r = radius;
    while (r > floor && evals < max_evals) {
        std::vector<double> y = x;
        double fy = fx;
        explore(y, fy);
        if (fy < fx) {
            // pattern moves along the improving direction
            while (evals < max_evals) {
                std::vector<double> z(n);
                for (std::size_t i = 0; i < n; ++i) z[i] = 2.0 * y[i] - x[i];
                x = y;
                fx = fy;
                double fz = f(z);
                ++evals;
                explore(z, fz);
                if (fz < fx) {
                    y = z;
                    fy = fz;
                } else
                    break;
            }
            if (canon) canon(x);
        } else {
            r *= 0.5;
            for (auto& s : step) s = std::copysign(r, s);
        }
    }
    return fx;
}

}  // namespace detail

struct LocalSolve {
    std::vector<double> z;
    double entropy = 0.0;
    double beta = 0.0;
    bool feasible = false;
};

// Augmented Lagrangian around a pattern-search inner loop.
inline LocalSolve solve_local(const OptProblem& pb, std::vector<double> z, const OptConfig& cfg, bool active = false) {
    const bool eq = pb.equality || active;
    double mu = cfg.penalty, lam = 0.0;
    auto gap = [&](const std::vector<double>& x) {
        return eq ? pb.bell(x) - pb.beta_target : pb.beta_target - pb.bell(x);
    };
    auto merit = [&](const std::vector<double>& x) {
        const double g = gap(x);
        if (eq) return pb.objective(x) + lam * g + 0.5 * mu * g * g;
        const double s = std::max(0.0, g + lam / mu);
        return pb.objective(x) + 0.5 * mu * s * s - 0.5 * lam * lam / mu;
    };
    double radius = cfg.radius;
    double prev_viol = std::numeric_limits<double>::infinity();
    for (int outer = 0; outer < cfg.max_outer; ++outer) {
        detail::pattern_search(merit, z, radius, cfg.radius_floor, pb.canonicalize);
        const double g = gap(z);
        const double viol = eq ? std::abs(g) : std::max(0.0, g);
        lam = eq ? lam + mu * g : std::max(0.0, lam + mu * g);
        if (viol <= cfg.feasibility_tol && outer > 0) break;
        if (viol > 0.25 * prev_viol) mu *= 2.0;
        prev_viol = viol;
        radius = std::max(1e-3, 0.1 * radius);
    }
    if (pb.canonicalize) pb.canonicalize(z);
    LocalSolve out;
    out.beta = pb.bell(z);
    out.entropy = pb.objective(z);
    out.feasible = pb.equality ? std::abs(out.beta - pb.beta_target) <= 1e-7 : out.beta >= pb.beta_target - 1e-7;
    out.z = std::move(z);
    return out;
}

inline OptResult run_restarts(const OptProblem& pb, const OptConfig& cfg,
                              const std::function<std::vector<double>(std::mt19937_64&)>& start) {
    if (cfg.restarts < 1) throw ValidationError("restarts must be positive");
    std::vector<LocalSolve> results(cfg.restarts);
    auto work = [&](int i) {
        std::mt19937_64 rng(restart_seed(cfg.seed, static_cast<std::uint64_t>(i)));
        results[i] = solve_local(pb, start(rng), cfg, pb.alternate_active && (i % 2 == 1));
    };
    unsigned nt = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
    nt = std::min<unsigned>(nt, cfg.restarts);
    if (nt <= 1) {
        for (int i = 0; i < cfg.restarts; ++i) work(i);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nt; ++t)
            pool.emplace_back([&, t] {
                for (int i = static_cast<int>(t); i < cfg.restarts; i += static_cast<int>(nt)) work(i);
            });
        for (auto& th : pool) th.join();
    }
    int best = -1;
    for (int i = 0; i < cfg.restarts; ++i)
        if (results[i].feasible && (best < 0 || results[i].entropy < results[best].entropy)) best = i;
    if (best < 0) throw NumericError("optimizer: no restart reached the Bell constraint for " + pb.ineq.name());
    OptResult r;
    r.entropy = std::clamp(results[best].entropy, 0.0, 2.0);
    r.argmin = results[best].z;
    r.names = pb.names;
    r.achieved_beta = results[best].beta;
    r.converged = true;
    r.restarts_used = cfg.restarts;
    return r;
}

// ---- block-diagonal problems (Holz, Parity-CHSH) ----

inline BlockDiagState block_state_from(const std::vector<double>& z) {
    BlockDiagState::Weights w{};
    double s = 0.0;
    for (int i = 0; i < 8; ++i) s += z[i] * z[i];
    if (!(s > 0.0)) s = 1.0, w[0] = 1.0;
    else
        for (int i = 0; i < 8; ++i) w[i] = z[i] * z[i] / s;
    BlockDiagState::Angles t{};
    for (int b = 0; b < 4; ++b) t[b] = z[8 + b];
    return BlockDiagState::from_eigen(w, t);
}

inline void canonicalize_block(std::vector<double>& z) {
    for (int b = 0; b < 4; ++b) {
        if (z[4 + b] * z[4 + b] > z[b] * z[b]) {
            std::swap(z[b], z[4 + b]);
            z[8 + b] += pi / 2;
        }
        z[8 + b] = std::remainder(z[8 + b], pi);
    }
    z[12] = std::remainder(z[12], 2.0 * pi);
}

inline std::vector<std::string> block_names() {
    return {"rho000", "rho001", "rho010", "rho011", "rho100", "rho101", "rho110", "rho111", "t00", "t01", "t10", "t11", "b0"};
}

inline std::vector<double> random_block_start(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> u(-pi, pi);
    std::vector<double> z(13);
    for (int i = 0; i < 8; ++i) z[i] = g(rng);
    for (int i = 8; i < 13; ++i) z[i] = u(rng);
    return z;
}

inline OptProblem holz_problem(double beta) {
    OptProblem pb;
    pb.ineq = holz();
    pb.beta_target = beta;
    pb.names = block_names();
    pb.weight_count = 8;
    pb.objective = [](const std::vector<double>& z) { return block_entropy_ab(block_state_from(z), z[12]); };
    pb.bell = [](const std::vector<double>& z) { return holz_vbar(block_state_from(z), z[12]); };
    pb.canonicalize = canonicalize_block;
    pb.alternate_active = true;
    return pb;
}

inline OptProblem parity_problem(double beta) {
    OptProblem pb = holz_problem(beta);
    pb.ineq = parity_chsh();
    pb.bell = [](const std::vector<double>& z) { return parity_vbar(block_state_from(z), z[12]); };
    return pb;
}

inline OptResult minimize_holz_two_outcome(double beta, const OptConfig& cfg = {}) {
    if (std::isnan(beta) || beta > 1.5 + 1e-12) throw DomainError("minimize_holz_two_outcome: beta must not exceed 3/2");
    return run_restarts(holz_problem(std::min(beta, 1.5)), cfg, random_block_start);
}

inline OptResult minimize_parity_two_outcome(double beta, const OptConfig& cfg = {}) {
    if (std::isnan(beta) || beta > std::sqrt(2.0) + 1e-12) throw DomainError("minimize_parity_two_outcome: beta must not exceed sqrt2");
    return run_restarts(parity_problem(std::min(beta, std::sqrt(2.0))), cfg, random_block_start);
}

// Re-evaluate an argmin of the block problems with full settings through the bell module.
inline double block_argmin_bell_value(const BellSpec& spec, const std::vector<double>& z) {
    const BlockDiagState st = block_state_from(z);
    const BlockCorrelators c = st.correlators();
    const double b0 = z[12];
    if (spec.kind == BellKind::Holz) {
        const HolzFreeAngles a = holz_vbar_argmax(c, b0);
        return bell_functional(spec, st.to_matrix(), holz_frame_settings(b0, a.a1, a.c_minus));
    }
    if (spec.kind == BellKind::ParityCHSH)
        return bell_functional(spec, st.to_matrix(), parity_frame_settings(b0, parity_vbar_argmax_a1(c, b0)));
    throw UnsupportedError("block_argmin_bell_value: Holz or Parity-CHSH only");
}

// ---- CHSH on Bell-diagonal states ----

struct ChshPoint {
    std::array<double, 4> lambda;  // index (i<<1)|j
    double phi_a0, phi_a1, phi_b0, phi_b1;
};

inline ChshPoint chsh_point_from(const std::vector<double>& z) {
    ChshPoint p{};
    double s = 0.0;
    for (int i = 0; i < 4; ++i) s += z[i] * z[i];
    for (int i = 0; i < 4; ++i) p.lambda[i] = s > 0.0 ? z[i] * z[i] / s : (i == 0 ? 1.0 : 0.0);
    p.phi_a0 = z[4];
    p.phi_a1 = z[5];
    p.phi_b0 = z[6];
    p.phi_b1 = z[7];
    return p;
}

inline double chsh_reduced_value(const ChshPoint& p) {
    const double d0 = p.lambda[0] - p.lambda[2], d1 = p.lambda[1] - p.lambda[3];
    auto sum = [&](auto op) {
        return std::cos(op(p.phi_a0, p.phi_b0)) + std::cos(op(p.phi_a0, p.phi_b1)) + std::cos(op(p.phi_a1, p.phi_b0)) -
               std::cos(op(p.phi_a1, p.phi_b1));
    };
    return d0 * sum([](double a, double b) { return a + b; }) + d1 * sum([](double a, double b) { return a - b; });
}

inline MeasurementSettings chsh_point_settings(const ChshPoint& p) {
    return {{{Observable::xy(p.phi_a0), Observable::xy(p.phi_a1)}, {Observable::xy(p.phi_b0), Observable::xy(p.phi_b1)}}};
}

inline OptProblem chsh_problem(double beta) {
    OptProblem pb;
    pb.ineq = chsh();
    pb.beta_target = beta;
    pb.equality = true;
    pb.names = {"lambda00", "lambda01", "lambda10", "lambda11", "phiA0", "phiA1", "phiB0", "phiB1"};
    pb.weight_count = 4;
    pb.objective = [](const std::vector<double>& z) {
        const ChshPoint p = chsh_point_from(z);
        return bell_diagonal_ab_entropy(p.lambda, p.phi_a0, p.phi_b0);
    };
    pb.bell = [](const std::vector<double>& z) { return chsh_reduced_value(chsh_point_from(z)); };
    pb.canonicalize = [](std::vector<double>& z) {
        for (int i = 4; i < 8; ++i) z[i] = std::remainder(z[i], 2.0 * pi);
    };
    return pb;
}

inline OptResult minimize_chsh_two_outcome(double beta, const OptConfig& cfg = {}) {
    const double q = 2.0 * std::sqrt(2.0);
    if (std::isnan(beta) || beta > q + 1e-12) throw DomainError("minimize_chsh_two_outcome: beta must not exceed 2 sqrt2");
    auto start = [](std::mt19937_64& rng) {
        std::normal_distribution<double> g(0.0, 1.0);
        std::uniform_real_distribution<double> u(-pi, pi);
        std::vector<double> z(8);
        for (int i = 0; i < 4; ++i) z[i] = g(rng);
        for (int i = 4; i < 8; ++i) z[i] = u(rng);
        return z;
    };
    return run_restarts(chsh_problem(std::min(beta, q)), cfg, start);
}

// ---- post-processing ----

struct PiecewiseLinear {
    std::vector<double> xs, ys;

    double operator()(double x) const {
        if (xs.empty()) throw ValidationError("empty piecewise curve");
        if (x <= xs.front()) return ys.front();
        if (x >= xs.back()) return ys.back();
        const auto it = std::upper_bound(xs.begin(), xs.end(), x);
        const std::size_t i = static_cast<std::size_t>(it - xs.begin());
        const double w = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
        return ys[i - 1] + w * (ys[i] - ys[i - 1]);
    }
};

// Lower convex envelope; collinear points are kept.
inline PiecewiseLinear convex_hull_lower(const std::vector<std::pair<double, double>>& pts) {
    if (pts.size() < 3) throw ValidationError("convex_hull_lower: at least 3 points required");
    for (std::size_t i = 1; i < pts.size(); ++i)
        if (!(pts[i].first > pts[i - 1].first)) throw ValidationError("convex_hull_lower: points must be sorted by beta");
    std::vector<std::pair<double, double>> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2) {
            const auto& o = hull[hull.size() - 2];
            const auto& a = hull.back();
            const double cross = (a.first - o.first) * (p.second - o.second) - (a.second - o.second) * (p.first - o.first);
            if (cross < -1e-15) hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    PiecewiseLinear out;
    for (const auto& h : hull) {
        out.xs.push_back(h.first);
        out.ys.push_back(h.second);
    }
    return out;
}

struct TightnessRow {
    double nu, beta, cond_entropy, analytic, expected;
};

struct TightnessReport {
    std::vector<TightnessRow> rows;
    double max_error = 0.0;
    bool passed = false;
};

inline double tau_optimal_beta(BellKind kind, double nu) {
    if (kind == BellKind::Holz) return 2.0 * nu + 1.0 / (2.0 * nu) - 1.0;
    if (kind == BellKind::ParityCHSH) return std::sqrt((2.0 * nu - 1.0) * (2.0 * nu - 1.0) + 1.0);
    throw UnsupportedError("tightness family defined for Holz and Parity-CHSH only");
}

inline TightnessReport verify_tightness(BellKind kind, const std::vector<double>& nu_grid, double tol = 1e-9) {
    TightnessReport rep;
    for (double nu : nu_grid) {
        const BlockDiagState st = tau_state(nu);
        TightnessRow row{nu, tau_optimal_beta(kind, nu), cond_entropy(st.to_matrix(), 3, {0}, {Observable::z()}), 0.0,
                         1.0 - binary_entropy(nu)};
        row.analytic = kind == BellKind::Holz ? holz_one_outcome(row.beta) : parity_chsh_one_outcome(row.beta);
        rep.max_error = std::max({rep.max_error, std::abs(row.cond_entropy - row.expected), std::abs(row.analytic - row.expected)});
        rep.rows.push_back(row);
    }
    rep.passed = rep.max_error <= tol;
    return rep;
}

struct NumericTable {
    BellSpec spec;
    std::vector<double> beta;
    std::vector<double> raw;    // optimizer minima
    std::vector<double> value;  // monotone lower convex envelope on the grid
};

inline OptResult minimize_two_outcome(const BellSpec& spec, double beta, const OptConfig& cfg) {
    if (spec.kind == BellKind::Holz) return minimize_holz_two_outcome(beta, cfg);
    if (spec.kind == BellKind::ParityCHSH) return minimize_parity_two_outcome(beta, cfg);
    if (spec.is_chsh()) return minimize_chsh_two_outcome(beta, cfg);
    throw UnsupportedError("no two-outcome optimization for " + spec.name());
}

// Optimizer minima on a uniform grid, pinned to 0 at the classical bound, made monotone and convex.
inline NumericTable numeric_two_outcome_table(const BellSpec& spec, int points, const OptConfig& cfg) {
    if (points < 3) throw ValidationError("numeric table needs at least 3 points");
    NumericTable t{spec, {}, {}, {}};
    for (int i = 0; i < points; ++i) {
        const double b = spec.local_bound + (spec.quantum_bound - spec.local_bound) * i / (points - 1);
        t.beta.push_back(i == points - 1 ? spec.quantum_bound : b);
        t.raw.push_back(i == 0 ? 0.0 : minimize_two_outcome(spec, t.beta.back(), cfg).entropy);
    }
    std::vector<double> mono = t.raw;
    for (int i = points - 2; i >= 0; --i) mono[i] = std::min(mono[i], mono[i + 1]);
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i < points; ++i) pts.emplace_back(t.beta[i], mono[i]);
    const PiecewiseLinear hull = convex_hull_lower(pts);
    for (double b : t.beta) t.value.push_back(hull(b));
    return t;
}

inline void write_table_header(std::ostream& os, const std::vector<std::pair<std::string, NumericTable>>& tables) {
    os << "// Generated by `dibound tables`; regenerate rather than edit.\n";
    os << "#pragma once\n\n#include <array>\n\nnamespace dibound::tables {\n";
    os << std::setprecision(17);
    for (const auto& [name, t] : tables) {
        for (const auto& [suffix, v] : {std::pair{"beta", &t.beta}, std::pair{"value", &t.value}}) {
            os << "\ninline constexpr std::array<double, " << v->size() << "> " << name << "_" << suffix << " = {";
            for (std::size_t i = 0; i < v->size(); ++i) os << (i % 4 == 0 ? "\n    " : " ") << (*v)[i] << ",";
            os << "\n};\n";
        }
    }
    os << "\n}  // namespace dibound::tables\n";
}

}  // namespace dibound
