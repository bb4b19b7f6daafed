#pragma once

#include <cmath>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "errors.hpp"

namespace dibound {

// Bisection with secant acceleration on a sign-changing bracket.
template <typename F>
double find_root(F&& f, double lo, double hi, double tol = 1e-10, int max_iter = 400) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::signbit(flo) == std::signbit(fhi)) {
        std::ostringstream os;
        os << "find_root: no sign change on [" << lo << ", " << hi << "], f = (" << flo << ", " << fhi << ")";
        throw NumericError(os.str());
    }
    for (int it = 0; it < max_iter && hi - lo > tol; ++it) {
        double x = 0.5 * (lo + hi);
        if (std::isfinite(flo) && std::isfinite(fhi)) {
            const double s = hi - fhi * (hi - lo) / (fhi - flo);
            // keep secant steps well inside the bracket
            const double margin = 0.05 * (hi - lo);
            if (s > lo + margin && s < hi - margin) x = s;
        }
        const double fx = f(x);
        if (fx == 0.0) return x;
        if (std::signbit(fx) == std::signbit(flo)) {
            lo = x;
            flo = fx;
        } else {
            hi = x;
            fhi = fx;
        }
    }
    return 0.5 * (lo + hi);
}

// First sub-interval of an n-point scan across which f changes sign.
template <typename F>
std::optional<std::pair<double, double>> scan_bracket(F&& f, double lo, double hi, int n = 1000) {
    double xp = lo, fp = f(lo);
    for (int i = 1; i <= n; ++i) {
        const double x = lo + (hi - lo) * i / n;
        const double fx = f(x);
        if (!std::isnan(fp) && !std::isnan(fx) && (fp == 0.0 || std::signbit(fp) != std::signbit(fx))) return std::make_pair(xp, x);
        xp = x;
        fp = fx;
    }
    return std::nullopt;
}

template <typename F>
double scan_and_solve(F&& f, double lo, double hi, const std::string& what, int n = 1000, double tol = 1e-10) {
    const auto br = scan_bracket(f, lo, hi, n);
    if (!br) {
        std::ostringstream os;
        os << what << ": no bracket on [" << lo << ", " << hi << "], f(lo) = " << f(lo) << ", f(hi) = " << f(hi);
        throw NumericError(os.str());
    }
    return find_root(f, br->first, br->second, tol);
}

// Golden-section maximization of a unimodal function on [lo, hi].
template <typename F>
std::pair<double, double> golden_max(F&& f, double lo, double hi, double tol = 1e-9) {
    const double g = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo, b = hi;
    double c = b - g * (b - a), d = a + g * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    const double x = 0.5 * (a + b);
    return {x, f(x)};
}

}  // namespace dibound
