#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "inequality.hpp"
#include "qmath.hpp"
#include "states.hpp"

namespace dibound {

// Tr[rho (O_1 x O_2 x ...)]; an empty optional is the identity on that party.
inline double expectation(const ComplexMatrix& rho, const std::vector<std::optional<ComplexMatrix>>& ops) {
    std::size_t dim = 1;
    std::vector<ComplexMatrix> factors;
    for (const auto& op : ops) {
        factors.push_back(op ? *op : ComplexMatrix::identity(2));
        if (factors.back().dim() != 2) throw ValidationError("expectation: single-qubit operators expected");
        dim *= 2;
    }
    if (dim != rho.dim()) throw ValidationError("expectation: operator count does not match state dimension");
    const ComplexMatrix big = kron_all(factors);
    cplx s = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) s += rho(i, j) * big(j, i);
    if (std::abs(s.imag()) > 1e-10) throw NumericError("expectation: non-real value");
    return s.real();
}

inline double correlator(const ComplexMatrix& rho, const std::vector<std::optional<Observable>>& obs) {
    std::vector<std::optional<ComplexMatrix>> ops;
    for (const auto& o : obs) ops.push_back(o ? std::optional<ComplexMatrix>(o->matrix()) : std::nullopt);
    return expectation(rho, ops);
}

struct BellValue {
    double beta = 0.0;
    BellSpec spec;
};

namespace detail {

inline void check_bell_state(const BellSpec& spec, const ComplexMatrix& rho, const MeasurementSettings& s) {
    const std::size_t want = std::size_t{1} << spec.parties();
    if (rho.dim() != want)
        throw ValidationError(spec.name() + " needs a " + std::to_string(spec.parties()) + "-qubit state");
    if (static_cast<int>(s.parties.size()) != spec.parties())
        throw ValidationError(spec.name() + ": settings have the wrong number of parties");
}

}  // namespace detail

inline double bell_functional(const BellSpec& spec, const ComplexMatrix& rho, const MeasurementSettings& s) {
    detail::check_bell_state(spec, rho, s);
    auto m = [&](int party, int x) { return std::optional<ComplexMatrix>(s.obs(party, x).matrix()); };
    auto e = [&](std::vector<std::optional<ComplexMatrix>> ops) { return expectation(rho, ops); };
    const std::nullopt_t id = std::nullopt;
    switch (spec.kind) {
        case BellKind::Holz:
            return e({m(0, 1), s.plus(1), s.plus(2)}) - e({m(0, 0), s.minus(1), id}) - e({m(0, 0), id, s.minus(2)}) -
                   e({id, s.minus(1), s.minus(2)});
        case BellKind::ParityCHSH:
            return e({m(0, 1), s.minus(1), m(2, 0)}) + e({m(0, 0), s.plus(1), id});
        case BellKind::MABK:
            return e({m(0, 0), m(1, 0), m(2, 1)}) + e({m(0, 0), m(1, 1), m(2, 0)}) + e({m(0, 1), m(1, 0), m(2, 0)}) -
                   e({m(0, 1), m(1, 1), m(2, 1)});
        case BellKind::AsymCHSH: {
            const double a = spec.alpha;
            return a * e({m(0, 0), m(1, 0)}) + a * e({m(0, 0), m(1, 1)}) + e({m(0, 1), m(1, 0)}) -
                   e({m(0, 1), m(1, 1)});
        }
    }
    throw ValidationError("bell_functional: unknown inequality");
}

inline BellValue bell_value(const BellSpec& spec, const ComplexMatrix& rho, const MeasurementSettings& s) {
    const double b = bell_functional(spec, rho, s);
    if (std::abs(b) > spec.quantum_bound + 1e-9)
        throw NumericError(spec.name() + " value " + std::to_string(b) + " exceeds the quantum bound");
    return {b, spec};
}

// Compact form 2 alpha <A0 B+> + 2 <A1 B->.
inline double asym_chsh_compact(double alpha, const ComplexMatrix& rho, const MeasurementSettings& s) {
    const BellSpec spec = asym_chsh(alpha);
    detail::check_bell_state(spec, rho, s);
    const auto a0 = s.obs(0, 0).matrix(), a1 = s.obs(0, 1).matrix();
    return 2.0 * alpha * expectation(rho, {a0, s.plus(1)}) + 2.0 * expectation(rho, {a1, s.minus(1)});
}

// Holz value in the reduced frame for a block-diagonal state.
inline double holz_reduced_value(const BlockDiagState& st, double b0, double a1, double c_minus) {
    const BlockCorrelators c = st.correlators();
    const double cb = std::cos(b0), sb = std::sin(b0);
    return (std::cos(a1) * c.zxx + std::sin(a1) * c.xxx) * sb * std::cos(c_minus) - cb * c.zzi +
           std::sin(c_minus) * c.ziz + cb * std::sin(c_minus) * c.izz;
}

// Maximum of holz_reduced_value over a1 and c_minus.
inline double holz_vbar(const BlockCorrelators& c, double b0) {
    const double cb = std::cos(b0), sb = std::sin(b0);
    const double u = c.ziz + cb * c.izz;
    return std::sqrt(sb * sb * (c.zxx * c.zxx + c.xxx * c.xxx) + u * u) - cb * c.zzi;
}

inline double holz_vbar(const BlockDiagState& st, double b0) { return holz_vbar(st.correlators(), b0); }

// Angles attaining holz_vbar.
struct HolzFreeAngles {
    double a1 = 0.0;
    double c_minus = 0.0;
};

inline HolzFreeAngles holz_vbar_argmax(const BlockCorrelators& c, double b0) {
    const double sb = std::sin(b0);
    const double u = c.ziz + std::cos(b0) * c.izz;
    const double w = std::hypot(c.zxx, c.xxx);
    // a1 aligns (cos a1, sin a1) with (zxx, xxx) sign-adjusted by sin b0
    double a1 = std::atan2(c.xxx, c.zxx);
    if (sb < 0) a1 += pi;
    return {a1, std::atan2(u, std::abs(sb) * w)};
}

// Parity-CHSH value in its reduced frame, maximized over a1.
inline double parity_vbar(const BlockCorrelators& c, double b0) {
    return std::abs(std::sin(b0)) * std::hypot(c.zxx, c.xxx) + std::cos(b0) * c.zzi;
}

inline double parity_vbar(const BlockDiagState& st, double b0) { return parity_vbar(st.correlators(), b0); }

inline double parity_vbar_argmax_a1(const BlockCorrelators& c, double b0) {
    double a1 = std::atan2(c.xxx, c.zxx);
    if (std::sin(b0) < 0) a1 += pi;
    return a1;
}

}  // namespace dibound
