#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "errors.hpp"
#include "optimize.hpp"
#include "rates.hpp"
#include "verify.hpp"

namespace dibound::cli {

struct Grid {
    double start = 0.0, stop = 1.0;
    int steps = 101;

    std::vector<double> points() const {
        if (steps == 1) return {start};
        std::vector<double> v(steps);
        for (int i = 0; i < steps; ++i) v[i] = start + (stop - start) * i / (steps - 1);
        return v;
    }
};

inline Grid parse_grid(const std::string& s) {
    std::istringstream is(s);
    Grid g;
    char c1 = 0, c2 = 0;
    if (!(is >> g.start >> c1 >> g.stop >> c2 >> g.steps) || c1 != ':' || c2 != ':' || !is.eof())
        throw ValidationError("grid must be start:stop:steps, got '" + s + "'");
    if (g.steps < 1) throw ValidationError("grid needs at least one step");
    if (g.stop < g.start) throw ValidationError("grid stop below start");
    return g;
}

struct Request {
    std::string command;
    std::string inequality = "holz";
    std::string noise = "local";
    std::optional<double> p, beta;
    double alpha = 1.0;
    bool alpha_given = false;
    double gamma = kDefaultGamma;
    std::optional<std::string> grid;
    int restarts = 64;
    std::uint64_t seed = 1;
    int threads = 0;
    std::string out;
    bool one_outcome = false;
    std::string rate;  // "dicka"
    std::string dire;  // "spot" | "recycled"
    int figure = 0;
    int points = 200;
};

struct Row {
    std::string quantity, inequality, noise;
    std::optional<double> p, beta;
    double value = 0.0;
    std::string flags;
};

inline std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", x);
    return buf;
}

inline void write_csv(std::ostream& os, const std::vector<Row>& rows) {
    os << "quantity,inequality,noise,p,beta,value,flags\n";
    for (const auto& r : rows)
        os << r.quantity << ',' << r.inequality << ',' << r.noise << ',' << (r.p ? fmt(*r.p) : "") << ','
           << (r.beta ? fmt(*r.beta) : "") << ',' << fmt(r.value) << ',' << r.flags << '\n';
}

// Evaluate f on every index with a small worker pool; results keep index order.
template <typename F>
auto parallel_map(std::size_t n, int threads, F&& f) -> std::vector<decltype(f(std::size_t{}))> {
    std::vector<decltype(f(std::size_t{}))> out(n);
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::min<std::size_t>(n, threads > 0 ? threads : hw);
    std::vector<std::exception_ptr> errors(n);
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < n; i += workers) {
                try {
                    out[i] = f(i);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

// Series keep their first-appearance order; rows within a series are sorted by p.
inline void sort_by_p(std::vector<Row>& rows) {
    std::vector<std::string> series;
    auto rank = [&series](const Row& r) {
        const std::string key = r.quantity + '/' + r.inequality + '/' + r.noise;
        const auto it = std::find(series.begin(), series.end(), key);
        if (it != series.end()) return std::size_t(it - series.begin());
        series.push_back(key);
        return series.size() - 1;
    };
    std::vector<std::pair<std::size_t, Row>> keyed;
    for (auto& r : rows) keyed.emplace_back(rank(r), std::move(r));
    std::stable_sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second.p.value_or(0.0) < b.second.p.value_or(0.0);
    });
    rows.clear();
    for (auto& [k, r] : keyed) rows.push_back(std::move(r));
}

class Runner {
public:
    Runner(const Request& rq, std::ostream& out) : rq_(rq), out_(out) {}

    int run() {
        const std::string& c = rq_.command;
        if (c == "bound") return bound();
        if (c == "rate") return rate();
        if (c == "threshold") return threshold();
        if (c == "optimize") return optimize();
        if (c == "verify") return verify();
        if (c == "sweep") return sweep();
        if (c == "tables") return tables();
        throw ValidationError("unknown command '" + c + "'");
    }

private:
    const Request& rq_;
    std::ostream& out_;

    BellSpec spec() const { return bell_spec_from_name(rq_.inequality, rq_.alpha); }
    NoiseModel noise(double p) const { return {noise_kind_from_name(rq_.noise), p}; }

    // asym-chsh maximizes over alpha unless --alpha is given
    bool free_alpha() const { return rq_.inequality == "asym-chsh" && !rq_.alpha_given; }

    Arity arity() const {
        if (rq_.one_outcome) return Arity::One;
        return rq_.dire == "recycled" ? Arity::RecycledTwo : Arity::Two;
    }

    RateKind rate_kind() const {
        if (!rq_.dire.empty()) return rate_kind_from_name(rq_.dire);
        return rate_kind_from_name(rq_.rate.empty() ? "dicka" : rq_.rate);
    }

    static std::string quantity_of(RateKind k) {
        switch (k) {
            case RateKind::Dicka: return "rate_dicka";
            case RateKind::DireSpot: return "rate_dire_spot";
            case RateKind::DireRecycled: return "rate_dire_recycled";
        }
        return "rate";
    }

    static std::string quantity_of(Arity a) {
        switch (a) {
            case Arity::One: return "bound_one";
            case Arity::Two: return "bound_two";
            case Arity::RecycledTwo: return "bound_recycled";
        }
        return "bound";
    }

    std::vector<double> p_points() const {
        if (rq_.grid) {
            const Grid g = parse_grid(*rq_.grid);
            if (g.start < 0.0 || g.stop > 1.0) throw ValidationError("p grid must lie in [0,1]");
            return g.points();
        }
        if (!rq_.p) throw ValidationError("--p or --grid required");
        return {*rq_.p};
    }

    std::vector<double> beta_points(const BoundCurve& c) const {
        if (rq_.grid) {
            const Grid g = parse_grid(*rq_.grid);
            if (g.stop > c.hi + 1e-9) throw ValidationError("beta grid exceeds the quantum bound");
            return g.points();
        }
        if (!rq_.beta) throw ValidationError("--beta or --grid required");
        return {*rq_.beta};
    }

    int emit(std::vector<Row> rows, bool scalar) {
        sort_by_p(rows);
        if (scalar && rq_.out.empty() && rows.size() == 1) {
            out_ << fmt(rows[0].value) << '\n';
            return 0;
        }
        if (rq_.out.empty()) {
            write_csv(out_, rows);
            return 0;
        }
        std::ofstream f(rq_.out);
        if (!f) throw ValidationError("cannot open '" + rq_.out + "' for writing");
        write_csv(f, rows);
        return 0;
    }

    std::vector<Row> bound_rows(const BellSpec& s, Arity a, const std::vector<double>& betas) const {
        const BoundCurve c = bound_curve(s, a);
        std::vector<Row> rows;
        for (double b : betas) rows.push_back({quantity_of(a), s.name(), "", std::nullopt, b, c(b), c.flags()});
        return rows;
    }

    std::vector<Row> rate_rows(RateKind k, const BellSpec& s, NoiseKind nk, const std::vector<double>& ps,
                               bool opt_alpha) const {
        const double gamma = rq_.gamma;
        const std::vector<RateResult> res = parallel_map(
            ps.size(), rq_.threads, [&](std::size_t i) { return rate_at(k, s, NoiseModel{nk, ps[i]}, gamma, opt_alpha); });
        std::vector<Row> rows;
        const std::string name = k == RateKind::DireRecycled ? "chsh" : opt_alpha ? "asym-chsh" : s.name();
        for (std::size_t i = 0; i < ps.size(); ++i)
            rows.push_back({quantity_of(k), name, nk == NoiseKind::Local ? "local" : "global", ps[i], res[i].beta_at_p,
                            res[i].rate, res[i].flags()});
        return rows;
    }

    int bound() {
        const BellSpec s = spec();
        const Arity a = arity();
        return emit(bound_rows(s, a, beta_points(bound_curve(s, a))), true);
    }

    int rate() {
        return emit(rate_rows(rate_kind(), spec(), noise_kind_from_name(rq_.noise), p_points(), free_alpha()), true);
    }

    int threshold() {
        const RateKind k = rate_kind();
        const BellSpec s = spec();
        const NoiseKind nk = noise_kind_from_name(rq_.noise);
        const double gamma = rq_.gamma;
        const double p = threshold_p([&](double q) { return rate_at(k, s, NoiseModel{nk, q}, gamma, free_alpha()).rate; });
        const RateResult at = rate_at(k, s, NoiseModel{nk, std::min(1.0, p)}, gamma, free_alpha());
        const std::string name = k == RateKind::DireRecycled ? "chsh" : rq_.inequality;
        return emit({{"threshold_" + quantity_of(k), name, rq_.noise, p, at.beta_at_p, p, at.flags()}}, true);
    }

    OptConfig opt_config() const {
        OptConfig cfg;
        if (rq_.restarts < 1) throw ValidationError("--restarts must be positive");
        cfg.restarts = rq_.restarts;
        cfg.seed = rq_.seed;
        cfg.threads = rq_.threads;
        return cfg;
    }

    int optimize() {
        const BellSpec s = spec();
        if (s.kind == BellKind::MABK || (s.kind == BellKind::AsymCHSH && !s.is_chsh()))
            throw UnsupportedError("optimize supports holz, parity-chsh and chsh");
        std::vector<double> betas;
        if (rq_.grid) betas = parse_grid(*rq_.grid).points();
        else if (rq_.beta)
            betas = {*rq_.beta};
        else
            throw ValidationError("--beta or --grid required");
        const OptConfig cfg = opt_config();
        std::vector<Row> rows;
        for (double b : betas) {
            if (b < s.local_bound || b > s.quantum_bound + 1e-9) throw DomainError("beta outside [local, quantum] bound");
            const OptResult r = minimize_two_outcome(s, b, cfg);
            rows.push_back({"entropy_min", s.name(), "", std::nullopt, b, r.entropy, "non-certified"});
        }
        return emit(std::move(rows), true);
    }

    int verify() {
        const std::vector<CheckResult> res = run_all_checks(rq_.seed);
        bool ok = true;
        for (const auto& r : res) {
            out_ << (r.passed ? "PASS " : "FAIL ") << r.name << " (max deviation " << fmt(r.max_deviation) << ")\n";
            ok = ok && r.passed;
        }
        return ok ? 0 : 1;
    }

    // CSV bundles for the bound and rate figures.
    int sweep() {
        std::vector<Row> rows;
        const int n = rq_.grid ? parse_grid(*rq_.grid).steps : 101;
        auto beta_grid = [n](const BellSpec& s) { return Grid{s.local_bound, s.quantum_bound, n}.points(); };
        auto append = [&rows](std::vector<Row> more) { rows.insert(rows.end(), more.begin(), more.end()); };
        const std::vector<double> ps = rq_.grid ? parse_grid(*rq_.grid).points() : Grid{0.5, 1.0, n}.points();
        switch (rq_.figure) {
            case 1:
                for (const BellSpec& s : {holz(), parity_chsh(), mabk(), chsh()}) append(bound_rows(s, Arity::One, beta_grid(s)));
                break;
            case 2:
                for (const BellSpec& s : {holz(), parity_chsh(), mabk(), chsh()}) append(bound_rows(s, Arity::Two, beta_grid(s)));
                append(bound_rows(chsh(), Arity::RecycledTwo, beta_grid(chsh())));
                break;
            case 4:
                for (const BellSpec& s : {holz(), parity_chsh(), chsh()})
                    append(rate_rows(RateKind::Dicka, s, noise_kind_from_name(rq_.noise), ps, s.is_chsh()));
                break;
            case 5:
                for (const BellSpec& s : {mabk(), holz(), parity_chsh(), chsh()})
                    append(rate_rows(RateKind::DireSpot, s, noise_kind_from_name(rq_.noise), ps, false));
                append(rate_rows(RateKind::DireRecycled, chsh(), noise_kind_from_name(rq_.noise), ps, false));
                break;
            default: throw ValidationError("--figure must be one of 1, 2, 4, 5");
        }
        return emit(std::move(rows), false);
    }

    int tables() {
        if (rq_.points < 3) throw ValidationError("--points must be at least 3");
        const OptConfig cfg = opt_config();
        std::vector<std::pair<std::string, NumericTable>> t;
        t.emplace_back("chsh", numeric_two_outcome_table(chsh(), rq_.points, cfg));
        t.emplace_back("parity_chsh", numeric_two_outcome_table(parity_chsh(), rq_.points, cfg));
        if (rq_.out.empty()) {
            write_table_header(out_, t);
            return 0;
        }
        std::ofstream f(rq_.out);
        if (!f) throw ValidationError("cannot open '" + rq_.out + "' for writing");
        write_table_header(f, t);
        return 0;
    }
};

// Exit codes: 0 success, 1 failed verification, 2 usage or validation error, 3 numeric failure.
inline int run(const Request& rq, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    try {
        return Runner(rq, out).run();
    } catch (const NumericError& e) {
        err << "numeric error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

inline int main(int argc, char** argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"Device-independent entropy bounds, key and randomness rates"};
    app.require_subcommand(1);
    Request rq;

    auto common = [&rq](CLI::App* c) {
        c->add_option("--inequality", rq.inequality, "holz|parity-chsh|mabk|chsh|asym-chsh");
        c->add_option("--noise", rq.noise, "local|global");
        c->add_option("--alpha", rq.alpha, "asymmetric CHSH weight");
        c->add_option("--grid", rq.grid, "start:stop:steps");
        c->add_option("--out", rq.out, "CSV output file");
        c->add_option("--threads", rq.threads, "worker threads (0 = all cores)");
    };
    auto rate_flags = [&rq](CLI::App* c) {
        c->add_option("--p", rq.p, "survival probability");
        c->add_option("--gamma", rq.gamma, "test-round probability");
        c->add_option("--rate", rq.rate, "dicka");
        c->add_option("--dire", rq.dire, "spot|recycled");
    };
    auto opt_flags = [&rq](CLI::App* c) {
        c->add_option("--restarts", rq.restarts, "optimizer restarts");
        c->add_option("--seed", rq.seed, "random seed");
    };

    CLI::App* bound = app.add_subcommand("bound", "entropy bound at a Bell value");
    common(bound);
    bound->add_option("--beta", rq.beta, "Bell value");
    bound->add_flag("--one-outcome", rq.one_outcome, "bound on H(A0|E)");
    bound->add_option("--dire", rq.dire, "recycled selects the recycled-input CHSH bound");

    CLI::App* rate = app.add_subcommand("rate", "DICKA or DIRE rate at a noise level");
    common(rate);
    rate_flags(rate);

    CLI::App* thr = app.add_subcommand("threshold", "smallest p with a positive rate");
    common(thr);
    rate_flags(thr);

    CLI::App* opt = app.add_subcommand("optimize", "numerical minimum of H(A0B0|E)");
    common(opt);
    opt_flags(opt);
    opt->add_option("--beta", rq.beta, "Bell value");

    CLI::App* ver = app.add_subcommand("verify", "run the property suite");
    ver->add_option("--seed", rq.seed, "random seed");

    CLI::App* sw = app.add_subcommand("sweep", "CSV curves for a figure");
    common(sw);
    sw->add_option("--figure", rq.figure, "1, 2, 4 or 5")->required();
    sw->add_option("--gamma", rq.gamma, "test-round probability");

    CLI::App* tab = app.add_subcommand("tables", "regenerate the numeric two-outcome tables");
    opt_flags(tab);
    tab->add_option("--points", rq.points, "grid points per table");
    tab->add_option("--out", rq.out, "header file");
    tab->add_option("--threads", rq.threads, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }
    const CLI::App* sub = app.get_subcommands().front();
    rq.command = sub->get_name();
    const CLI::Option* a = sub->get_option_no_throw("--alpha");
    rq.alpha_given = a && a->count() > 0;
    return run(rq, out, err);
}

}  // namespace dibound::cli
