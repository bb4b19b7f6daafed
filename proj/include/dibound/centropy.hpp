#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "qmath.hpp"
#include "states.hpp"

namespace dibound {

struct Purification {
    std::vector<cplx> psi;  // system index major, environment minor
    std::size_t system_dim = 0;
    std::size_t env_dim = 0;

    ComplexMatrix system_marginal() const {
        ComplexMatrix m(system_dim);
        for (std::size_t i = 0; i < system_dim; ++i)
            for (std::size_t j = 0; j < system_dim; ++j) {
                cplx s = 0.0;
                for (std::size_t e = 0; e < env_dim; ++e) s += psi[i * env_dim + e] * std::conj(psi[j * env_dim + e]);
                m(i, j) = s;
            }
        return m;
    }
};

namespace detail {

struct Spectral {
    std::vector<double> mu;
    std::vector<std::vector<cplx>> vecs;
};

inline Spectral support_of(const ComplexMatrix& rho) {
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > 1e-9) throw ValidationError("state trace " + std::to_string(tr) + " != 1");
    const EigenSystem es = eig_hermitian(rho);
    Spectral s;
    for (std::size_t k = 0; k < es.values.size(); ++k) {
        const double mu = clamp_eigenvalue(es.values[k]);
        if (mu <= 1e-14) continue;
        s.mu.push_back(mu);
        std::vector<cplx> v(rho.dim());
        for (std::size_t i = 0; i < rho.dim(); ++i) v[i] = es.vectors(i, k);
        s.vecs.push_back(std::move(v));
    }
    return s;
}

inline std::size_t next_pow2(std::size_t n) {
    std::size_t p = 1;
    while (p < n) p <<= 1;
    return p;
}

inline ComplexMatrix outcome_projector(const Observable& o, int outcome) {
    const ComplexMatrix m = o.matrix();
    if ((m * m).max_abs_diff(ComplexMatrix::identity(2)) > 1e-10) throw ValidationError("observable is not an involution");
    return (ComplexMatrix::identity(2) + m * cplx(outcome == 0 ? 1.0 : -1.0)) * cplx(0.5);
}

inline void check_measurement(const ComplexMatrix& rho, int qubit_count, const std::vector<int>& parties,
                              const std::vector<Observable>& obs) {
    checked_qubit_dim(rho.dim(), qubit_count);
    if (parties.empty()) throw ValidationError("at least one measured party required");
    if (parties.size() != obs.size()) throw ValidationError("one observable per measured party required");
    for (std::size_t a = 0; a < parties.size(); ++a) {
        if (parties[a] < 0 || parties[a] >= qubit_count) throw IndexError("measured party out of range");
        for (std::size_t b = 0; b < a; ++b)
            if (parties[a] == parties[b]) throw ValidationError("measured party listed twice");
    }
}

// Pi_o embedded on the full register; outcome bits follow `parties`, first party most significant.
inline ComplexMatrix joint_projector(int qubit_count, const std::vector<int>& parties, const std::vector<Observable>& obs,
                                     std::size_t outcome) {
    std::vector<ComplexMatrix> f(qubit_count, ComplexMatrix::identity(2));
    const std::size_t n = parties.size();
    for (std::size_t a = 0; a < n; ++a) f[parties[a]] = outcome_projector(obs[a], int((outcome >> (n - 1 - a)) & 1u));
    return kron_all(f);
}

}  // namespace detail

inline Purification purify(const ComplexMatrix& rho) {
    const detail::Spectral s = detail::support_of(rho);
    Purification p;
    p.system_dim = rho.dim();
    p.env_dim = detail::next_pow2(s.mu.size());
    p.psi.assign(p.system_dim * p.env_dim, 0.0);
    for (std::size_t m = 0; m < s.mu.size(); ++m) {
        const double w = std::sqrt(s.mu[m]);
        for (std::size_t i = 0; i < p.system_dim; ++i) p.psi[i * p.env_dim + m] = w * s.vecs[m][i];
    }
    return p;
}

struct CqDecomposition {
    std::vector<double> outcome_probs;
    std::vector<ComplexMatrix> eve_conditionals;  // unnormalized
};

inline CqDecomposition cq_decompose(const ComplexMatrix& rho, int qubit_count, const std::vector<int>& parties,
                                    const std::vector<Observable>& obs) {
    detail::check_measurement(rho, qubit_count, parties, obs);
    const detail::Spectral s = detail::support_of(rho);
    const std::size_t de = detail::next_pow2(s.mu.size());
    const std::size_t outcomes = std::size_t{1} << parties.size();
    CqDecomposition cq;
    for (std::size_t o = 0; o < outcomes; ++o) {
        const ComplexMatrix pi_o = detail::joint_projector(qubit_count, parties, obs, o);
        std::vector<std::vector<cplx>> pv;
        for (const auto& v : s.vecs) pv.push_back(pi_o.apply(v));
        ComplexMatrix sigma(de);
        for (std::size_t m = 0; m < s.mu.size(); ++m)
            for (std::size_t mp = 0; mp < s.mu.size(); ++mp) {
                cplx ip = 0.0;  // <v_m'| Pi |v_m>
                for (std::size_t i = 0; i < rho.dim(); ++i) ip += std::conj(s.vecs[mp][i]) * pv[m][i];
                sigma(m, mp) = std::sqrt(s.mu[m] * s.mu[mp]) * ip;
            }
        cq.outcome_probs.push_back(sigma.trace().real());
        cq.eve_conditionals.push_back(std::move(sigma));
    }
    return cq;
}

// H(outcomes | E) with E purifying rho.
inline double cond_entropy(const ComplexMatrix& rho, int qubit_count, const std::vector<int>& parties,
                           const std::vector<Observable>& obs) {
    const CqDecomposition cq = cq_decompose(rho, qubit_count, parties, obs);
    double joint = 0.0;
    for (const auto& sigma : cq.eve_conditionals) joint += matrix_spectrum_entropy(sigma);
    return joint - von_neumann_entropy(rho);
}

// Same quantity via S(sigma_o) = S(<o|rho|o>) on the unmeasured parties (rank-one projectors).
inline double cond_entropy_fast(const ComplexMatrix& rho, int qubit_count, const std::vector<int>& parties,
                                const std::vector<Observable>& obs) {
    detail::check_measurement(rho, qubit_count, parties, obs);
    std::vector<int> rest;
    for (int q = 0; q < qubit_count; ++q)
        if (std::find(parties.begin(), parties.end(), q) == parties.end()) rest.push_back(q);
    double joint = 0.0;
    for (std::size_t o = 0; o < (std::size_t{1} << parties.size()); ++o) {
        const ComplexMatrix pi_o = detail::joint_projector(qubit_count, parties, obs, o);
        const ComplexMatrix post = pi_o * rho * pi_o;
        if (rest.empty()) joint -= xlog2x(clamp_eigenvalue(post.trace().real()));
        else joint += matrix_spectrum_entropy(partial_trace(post, qubit_count, rest));
    }
    return joint - von_neumann_entropy(rho);
}

// H(A0 B0 | E) for a block-diagonal state, A0 = Z and B0 = Z cos b0 + X sin b0.
inline double block_entropy_ab(const BlockDiagState& st, double b0) {
    const BasicMatrix<double> m = st.to_real_matrix();
    const double ch = std::cos(0.5 * b0), sh = std::sin(0.5 * b0);
    const double ub[2][2] = {{ch, sh}, {-sh, ch}};
    double joint = 0.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            double c[2][2] = {{0, 0}, {0, 0}};
            for (int y = 0; y < 2; ++y)
                for (int yp = 0; yp < 2; ++yp) {
                    const double w = ub[b][y] * ub[b][yp];
                    if (w == 0.0) continue;
                    for (int z = 0; z < 2; ++z)
                        for (int zp = 0; zp < 2; ++zp) c[z][zp] += w * m((a << 2) | (y << 1) | z, (a << 2) | (yp << 1) | zp);
                }
            const auto [l0, l1] = eigvals_2x2(c[0][0], c[1][1], std::abs(c[0][1]));
            joint -= xlog2x(std::max(l0, 0.0)) + xlog2x(std::max(l1, 0.0));
        }
    return joint - st.entropy();
}

// H(A0 | E) for a block-diagonal state with A0 = Z.
inline double block_entropy_a(const BlockDiagState& st) {
    const ComplexMatrix m = st.to_matrix();
    double joint = 0.0;
    for (int a = 0; a < 2; ++a) {
        ComplexMatrix sub(4);
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y) sub(x, y) = m((a << 2) | x, (a << 2) | y);
        joint += matrix_spectrum_entropy(sub);
    }
    return joint - st.entropy();
}

// 1 + h(2p) - H({lambda}) for a Bell-diagonal pair measured in the XY plane.
inline double bell_diagonal_ab_entropy(const std::array<double, 4>& lambda, double phi_a0, double phi_b0) {
    const double p = 0.25 * (1.0 + std::cos(phi_a0 + phi_b0) * (lambda[0] - lambda[2]) +
                             std::cos(phi_a0 - phi_b0) * (lambda[1] - lambda[3]));
    double hl = 0.0;
    for (double l : lambda) hl -= xlog2x(std::max(l, 0.0));
    return 1.0 + binary_entropy(std::clamp(2.0 * p, 0.0, 1.0)) - hl;
}

// sum_ij lambda_ij |psi_ij><psi_ij|, psi_ij = (|0j> + (-1)^i |1 jbar>)/sqrt2; index (i<<1)|j.
inline ComplexMatrix bell_diagonal_state(const std::array<double, 4>& lambda) {
    ComplexMatrix rho(4);
    const double h = 1.0 / std::sqrt(2.0);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            std::vector<cplx> v(4, 0.0);
            v[j] = h;
            v[2 | (1 - j)] = i ? -h : h;
            rho += ComplexMatrix::projector(v) * cplx(lambda[(i << 1) | j]);
        }
    return rho;
}

}  // namespace dibound
