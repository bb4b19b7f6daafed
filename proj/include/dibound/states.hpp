#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "inequality.hpp"
#include "qmath.hpp"

namespace dibound {

using std::numbers::pi;

// (|0jk> + (-1)^i |1 jbar kbar>)/sqrt2, qubit 0 most significant.
inline std::vector<cplx> ghz_basis_vector(int i, int j, int k) {
    for (int b : {i, j, k})
        if (b != 0 && b != 1) throw ValidationError("ghz_basis_vector: indices must be bits");
    std::vector<cplx> v(8, 0.0);
    const double s = 1.0 / std::sqrt(2.0);
    v[(j << 1) | k] = s;
    v[4 | ((1 - j) << 1) | (1 - k)] = (i == 0 ? s : -s);
    return v;
}

inline ComplexMatrix ghz_basis_state(int i, int j, int k) { return ComplexMatrix::projector(ghz_basis_vector(i, j, k)); }

// (|0...0> + |1...1>)/sqrt2 projector; n = 2 gives Phi+.
inline ComplexMatrix ghz_state(int qubits = 3) {
    if (qubits < 2 || qubits > 6) throw ValidationError("ghz_state: 2 to 6 qubits supported");
    std::vector<cplx> v(std::size_t{1} << qubits, 0.0);
    v.front() = v.back() = 1.0 / std::sqrt(2.0);
    return ComplexMatrix::projector(v);
}

inline ComplexMatrix bell_phi_plus() { return ghz_state(2); }

inline ComplexMatrix embed_single(const ComplexMatrix& op, int qubit, int qubit_count) {
    ComplexMatrix out = qubit == 0 ? op : ComplexMatrix::identity(2);
    for (int q = 1; q < qubit_count; ++q) out = kron(out, q == qubit ? op : ComplexMatrix::identity(2));
    return out;
}

inline void check_probability(double p, const char* what) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError(std::string(what) + ": p must lie in [0,1]");
}

// sigma -> p sigma + (1-p) I/2 Tr_q sigma on each qubit, via the Pauli mixture.
inline ComplexMatrix depolarize_local(const ComplexMatrix& rho, double p, int qubit_count) {
    check_probability(p, "depolarize_local");
    checked_qubit_dim(rho.dim(), qubit_count);
    ComplexMatrix out = rho;
    const std::array<ComplexMatrix, 3> paulis{pauli_x(), pauli_y(), pauli_z()};
    for (int q = 0; q < qubit_count; ++q) {
        ComplexMatrix next = out * cplx((1.0 + 3.0 * p) / 4.0);
        for (const auto& s : paulis) {
            const ComplexMatrix e = embed_single(s, q, qubit_count);
            next += (e * out * e) * cplx((1.0 - p) / 4.0);
        }
        out = next;
    }
    return out;
}

inline ComplexMatrix depolarize_global(const ComplexMatrix& rho, double p) {
    check_probability(p, "depolarize_global");
    const double n = static_cast<double>(rho.dim());
    return rho * cplx(p) + ComplexMatrix::identity(rho.dim()) * cplx((1.0 - p) / n);
}

enum class NoiseKind { Local, Global };

struct NoiseModel {
    NoiseKind kind = NoiseKind::Local;
    double p = 1.0;

    NoiseModel() = default;
    NoiseModel(NoiseKind k, double prob) : kind(k), p(prob) { check_probability(prob, "NoiseModel"); }

    ComplexMatrix apply(const ComplexMatrix& rho, int qubit_count) const {
        return kind == NoiseKind::Local ? depolarize_local(rho, p, qubit_count) : depolarize_global(rho, p);
    }
    std::string name() const { return kind == NoiseKind::Local ? "local" : "global"; }
};

inline NoiseKind noise_kind_from_name(const std::string& s) {
    if (s == "local") return NoiseKind::Local;
    if (s == "global") return NoiseKind::Global;
    throw ValidationError("unknown noise model '" + s + "'");
}

struct BlockCorrelators {
    double xxx = 0, zxx = 0, zzi = 0, ziz = 0, izz = 0;
};

// GHZ-basis block-diagonal three-qubit state. Block jk holds psi_{0jk} and psi_{1 jbar kbar};
// its eigenvectors are cos t psi_0jk + sin t psi_1jbarkbar (weight rho_0jk) and the orthogonal one (rho_1jk).
class BlockDiagState {
public:
    using Weights = std::array<double, 8>;  // index (i<<2)|(j<<1)|k
    using Angles = std::array<double, 4>;   // index (j<<1)|k

    static constexpr int idx(int i, int j, int k) { return (i << 2) | (j << 1) | k; }
    static constexpr int blk(int j, int k) { return (j << 1) | k; }

    static BlockDiagState from_eigen(const Weights& rho, const Angles& t) {
        double s = 0.0;
        for (double x : rho) {
            if (!(x >= -1e-10)) throw ValidationError("BlockDiagState: negative eigenvalue");
            s += x;
        }
        if (std::abs(s - 1.0) > 1e-10) throw ValidationError("BlockDiagState: weights must sum to 1");
        BlockDiagState b;
        b.rho_ = rho;
        b.t_ = t;
        return b;
    }

    static BlockDiagState from_lambda(const Weights& lambda, const Angles& r) {
        Weights rho{};
        Angles t{};
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                const double a = lambda[idx(0, j, k)];
                const double d = lambda[idx(1, 1 - j, 1 - k)];
                const double rr = r[blk(j, k)];
                const double root = std::hypot(a - d, 2.0 * rr);
                rho[idx(0, j, k)] = 0.5 * (a + d + root);
                rho[idx(1, j, k)] = 0.5 * (a + d - root);
                t[blk(j, k)] = 0.5 * std::atan2(2.0 * rr, a - d);
            }
        return from_eigen(rho, t);
    }

    double rho(int i, int j, int k) const { return rho_[idx(i, j, k)]; }
    double t(int j, int k) const { return t_[blk(j, k)]; }
    const Weights& eigenvalues() const { return rho_; }
    const Angles& angles() const { return t_; }

    double lambda(int i, int j, int k) const {
        // lambda_0jk and lambda_1jbarkbar live in block jk
        const int bj = i == 0 ? j : 1 - j, bk = i == 0 ? k : 1 - k;
        const double c = std::cos(t(bj, bk)), s = std::sin(t(bj, bk));
        const double r0 = rho(0, bj, bk), r1 = rho(1, bj, bk);
        return i == 0 ? c * c * r0 + s * s * r1 : c * c * r1 + s * s * r0;
    }

    double r(int j, int k) const { return 0.5 * std::sin(2.0 * t(j, k)) * (rho(0, j, k) - rho(1, j, k)); }

    Weights lambdas() const {
        Weights l{};
        for (int i = 0; i < 8; ++i) l[i] = lambda(i >> 2, (i >> 1) & 1, i & 1);
        return l;
    }
    Angles coherences() const {
        Angles c{};
        for (int b = 0; b < 4; ++b) c[b] = r(b >> 1, b & 1);
        return c;
    }

    // Same state with rho_0jk >= rho_1jk in every block.
    BlockDiagState canonical() const {
        BlockDiagState out = *this;
        for (int b = 0; b < 4; ++b) {
            double& r0 = out.rho_[b];
            double& r1 = out.rho_[4 | b];
            if (r1 > r0) {
                std::swap(r0, r1);
                out.t_[b] += pi / 2;
            }
            out.t_[b] = std::remainder(out.t_[b], pi);
        }
        return out;
    }

    BlockCorrelators correlators() const {
        BlockCorrelators c;
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                const double d = rho(0, j, k) - rho(1, j, k);
                const double s = rho(0, j, k) + rho(1, j, k);
                const double c2 = std::cos(2.0 * t(j, k)), s2 = std::sin(2.0 * t(j, k));
                const double sj = j ? -1.0 : 1.0, sk = k ? -1.0 : 1.0;
                c.xxx += d * c2;
                c.zxx += d * s2;
                c.zzi += sj * d * c2;
                c.ziz += sk * d * c2;
                c.izz += sj * sk * s;
            }
        return c;
    }

    double entropy() const { return spectrum_entropy({rho_.begin(), rho_.end()}); }

    // Real 8x8 matrix in the computational basis.
    BasicMatrix<double> to_real_matrix() const {
        BasicMatrix<double> m(8);
        const double h = 1.0 / std::sqrt(2.0);
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                // psi_0jk support: |0jk> (+h), |1 jbar kbar> (+h)
                // psi_1 jbar kbar support: |0 jbar kbar> (+h), |1 jk> (-h)
                const int e[4] = {(j << 1) | k, 4 | ((1 - j) << 1) | (1 - k), ((1 - j) << 1) | (1 - k), 4 | (j << 1) | k};
                const double c = std::cos(t(j, k)), s = std::sin(t(j, k));
                const double u0[4] = {c * h, c * h, s * h, -s * h};
                const double u1[4] = {-s * h, -s * h, c * h, -c * h};
                const double w0 = rho(0, j, k), w1 = rho(1, j, k);
                for (int x = 0; x < 4; ++x)
                    for (int y = 0; y < 4; ++y) m(e[x], e[y]) += w0 * u0[x] * u0[y] + w1 * u1[x] * u1[y];
            }
        return m;
    }

    ComplexMatrix to_matrix() const {
        const auto m = to_real_matrix();
        ComplexMatrix out(8);
        for (std::size_t i = 0; i < 8; ++i)
            for (std::size_t j = 0; j < 8; ++j) out(i, j) = m(i, j);
        return out;
    }

private:
    Weights rho_{};
    Angles t_{};
};

inline BlockDiagState tau_state(double nu) {
    if (!(nu >= 0.5 && nu <= 1.0)) throw DomainError("tau_state: nu must lie in [1/2, 1]");
    BlockDiagState::Weights lambda{};
    lambda[BlockDiagState::idx(0, 0, 0)] = nu;
    lambda[BlockDiagState::idx(1, 0, 0)] = 1.0 - nu;
    return BlockDiagState::from_lambda(lambda, {});
}

enum class Plane { XZ, XY };

struct Observable {
    Plane plane = Plane::XZ;
    double angle = 0.0;

    // XZ: Z cos a + X sin a.  XY: X cos a + Y sin a.
    ComplexMatrix matrix() const {
        const double c = std::cos(angle), s = std::sin(angle);
        if (plane == Plane::XZ) return ComplexMatrix(2, {c, s, s, -c});
        return ComplexMatrix(2, {0.0, cplx(c, -s), cplx(c, s), 0.0});
    }

    static Observable xz(double a) { return {Plane::XZ, a}; }
    static Observable xy(double a) { return {Plane::XY, a}; }
    static Observable z() { return xz(0.0); }
    static Observable x() { return xz(pi / 2); }
    static Observable y() { return xy(pi / 2); }
};

struct MeasurementSettings {
    std::vector<std::array<Observable, 2>> parties;

    const Observable& obs(int party, int input) const { return parties.at(party).at(input); }
    double angle(int party, int input) const { return obs(party, input).angle; }
    double plus_angle(int party) const { return 0.5 * (angle(party, 0) + angle(party, 1)); }
    double minus_angle(int party) const { return 0.5 * (angle(party, 0) - angle(party, 1)); }

    // (O_0 +- O_1)/2
    ComplexMatrix plus(int party) const { return (obs(party, 0).matrix() + obs(party, 1).matrix()) * cplx(0.5); }
    ComplexMatrix minus(int party) const { return (obs(party, 0).matrix() - obs(party, 1).matrix()) * cplx(0.5); }
};

// Full settings for the reduced Holz frame: a0 = 0, b+ = c+ = pi/2.
inline MeasurementSettings holz_frame_settings(double b0, double a1, double c_minus) {
    return {{{Observable::xz(0.0), Observable::xz(a1)},
             {Observable::xz(b0), Observable::xz(pi - b0)},
             {Observable::xz(pi / 2 + c_minus), Observable::xz(pi / 2 - c_minus)}}};
}

// Parity-CHSH frame: b1 = -b0, Charlie fixed to X.
inline MeasurementSettings parity_frame_settings(double b0, double a1) {
    return {{{Observable::z(), Observable::xz(a1)},
             {Observable::xz(b0), Observable::xz(-b0)},
             {Observable::x(), Observable::x()}}};
}

inline MeasurementSettings optimal_settings(const BellSpec& spec) {
    switch (spec.kind) {
        case BellKind::Holz: return holz_frame_settings(2 * pi / 3, pi / 2, pi / 6);
        case BellKind::ParityCHSH: return parity_frame_settings(pi / 4, pi / 2);
        case BellKind::MABK:
            return {{{Observable::y(), Observable::xy(0.0)},
                     {Observable::y(), Observable::xy(0.0)},
                     {Observable::xy(-pi / 2), Observable::xy(pi)}}};
        case BellKind::AsymCHSH: {
            const double th = std::atan2(1.0, spec.alpha);
            return {{{Observable::z(), Observable::x()}, {Observable::xz(th), Observable::xz(-th)}}};
        }
    }
    throw ValidationError("optimal_settings: unknown inequality");
}

// The state an honest implementation shares: GHZ for tripartite, Phi+ for bipartite.
inline ComplexMatrix honest_state(const BellSpec& spec) { return ghz_state(spec.parties()); }

}  // namespace dibound
