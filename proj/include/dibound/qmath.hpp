#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace dibound {

using cplx = std::complex<double>;

inline constexpr std::size_t kMaxKronDim = 4096;
inline constexpr std::size_t kMaxEigDim = 64;

// Dense square matrix, row-major.
template <typename T>
class BasicMatrix {
public:
    BasicMatrix() = default;

    explicit BasicMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, T{}) {
        if (dim == 0) throw ValidationError("matrix dimension must be positive");
        if (dim > kMaxKronDim) throw SizeError("matrix dimension " + std::to_string(dim) + " exceeds 4096");
    }

    BasicMatrix(std::size_t dim, std::initializer_list<T> entries) : BasicMatrix(dim) {
        if (entries.size() != dim * dim) throw ValidationError("entry count does not match dimension");
        std::copy(entries.begin(), entries.end(), data_.begin());
    }

    static BasicMatrix identity(std::size_t dim) {
        BasicMatrix m(dim);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = T(1);
        return m;
    }

    static BasicMatrix diagonal(const std::vector<double>& d) {
        BasicMatrix m(d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = T(d[i]);
        return m;
    }

    // |v><v|
    static BasicMatrix projector(const std::vector<T>& v) {
        BasicMatrix m(v.size());
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = 0; j < v.size(); ++j) m(i, j) = v[i] * conj_of(v[j]);
        return m;
    }

    std::size_t dim() const { return dim_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
    const std::vector<T>& data() const { return data_; }

    BasicMatrix& operator+=(const BasicMatrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }
    BasicMatrix& operator-=(const BasicMatrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }
    BasicMatrix& operator*=(T s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend BasicMatrix operator+(BasicMatrix a, const BasicMatrix& b) { return a += b; }
    friend BasicMatrix operator-(BasicMatrix a, const BasicMatrix& b) { return a -= b; }
    friend BasicMatrix operator*(BasicMatrix a, T s) { return a *= s; }
    friend BasicMatrix operator*(T s, BasicMatrix a) { return a *= s; }

    friend BasicMatrix operator*(const BasicMatrix& a, const BasicMatrix& b) {
        a.check_same(b);
        const std::size_t n = a.dim_;
        BasicMatrix c(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t k = 0; k < n; ++k) {
                const T aik = a(i, k);
                if (aik == T{}) continue;
                for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (v.size() != dim_) throw ValidationError("vector length does not match matrix dimension");
        std::vector<T> out(dim_, T{});
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    BasicMatrix dagger() const {
        BasicMatrix m(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) m(j, i) = conj_of((*this)(i, j));
        return m;
    }

    T trace() const {
        T s{};
        for (std::size_t i = 0; i < dim_; ++i) s += (*this)(i, i);
        return s;
    }

    double max_abs_diff(const BasicMatrix& o) const {
        check_same(o);
        double m = 0.0;
        for (std::size_t i = 0; i < data_.size(); ++i) m = std::max(m, std::abs(data_[i] - o.data_[i]));
        return m;
    }

    bool is_hermitian(double tol = 1e-12) const {
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i; j < dim_; ++j)
                if (std::abs((*this)(i, j) - conj_of((*this)(j, i))) > tol) return false;
        return true;
    }

private:
    static T conj_of(const T& x) {
        if constexpr (std::is_same_v<T, cplx>) return std::conj(x);
        else return x;
    }
    void check_same(const BasicMatrix& o) const {
        if (dim_ != o.dim_) throw ValidationError("matrix dimensions differ");
    }

    std::size_t dim_ = 0;
    std::vector<T> data_;
};

using ComplexMatrix = BasicMatrix<cplx>;

inline ComplexMatrix pauli_x() { return ComplexMatrix(2, {0.0, 1.0, 1.0, 0.0}); }
inline ComplexMatrix pauli_y() { return ComplexMatrix(2, {0.0, cplx(0, -1), cplx(0, 1), 0.0}); }
inline ComplexMatrix pauli_z() { return ComplexMatrix(2, {1.0, 0.0, 0.0, -1.0}); }

template <typename T>
BasicMatrix<T> kron(const BasicMatrix<T>& a, const BasicMatrix<T>& b) {
    const std::size_t n = a.dim() * b.dim();
    if (n > kMaxKronDim) throw SizeError("kron output dimension " + std::to_string(n) + " exceeds 4096");
    BasicMatrix<T> m(n);
    for (std::size_t i1 = 0; i1 < a.dim(); ++i1)
        for (std::size_t j1 = 0; j1 < a.dim(); ++j1) {
            const T x = a(i1, j1);
            if (x == T{}) continue;
            for (std::size_t i2 = 0; i2 < b.dim(); ++i2)
                for (std::size_t j2 = 0; j2 < b.dim(); ++j2)
                    m(i1 * b.dim() + i2, j1 * b.dim() + j2) = x * b(i2, j2);
        }
    return m;
}

template <typename T>
BasicMatrix<T> kron_all(const std::vector<BasicMatrix<T>>& factors) {
    if (factors.empty()) throw ValidationError("kron_all needs at least one factor");
    BasicMatrix<T> m = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) m = kron(m, factors[i]);
    return m;
}

inline std::size_t checked_qubit_dim(std::size_t dim, int qubit_count) {
    if (qubit_count < 1 || qubit_count > 12 || (std::size_t{1} << qubit_count) != dim)
        throw ValidationError("matrix dimension " + std::to_string(dim) + " is not 2^" + std::to_string(qubit_count));
    return dim;
}

// Qubit 0 is the most significant bit of the basis index.
template <typename T>
BasicMatrix<T> partial_trace(const BasicMatrix<T>& rho, int qubit_count, std::vector<int> keep) {
    checked_qubit_dim(rho.dim(), qubit_count);
    if (keep.empty()) throw ValidationError("partial_trace: keep must be non-empty");
    std::sort(keep.begin(), keep.end());
    if (std::adjacent_find(keep.begin(), keep.end()) != keep.end())
        throw ValidationError("partial_trace: duplicate qubit index");
    for (int q : keep)
        if (q < 0 || q >= qubit_count) throw IndexError("partial_trace: qubit index " + std::to_string(q) + " out of range");

    std::vector<int> traced;
    for (int q = 0; q < qubit_count; ++q)
        if (!std::binary_search(keep.begin(), keep.end(), q)) traced.push_back(q);

    const std::size_t nk = keep.size();
    const std::size_t nt = traced.size();
    auto compose = [&](std::size_t kbits, std::size_t tbits) {
        std::size_t idx = 0;
        for (std::size_t m = 0; m < nk; ++m)
            if ((kbits >> (nk - 1 - m)) & 1u) idx |= std::size_t{1} << (qubit_count - 1 - keep[m]);
        for (std::size_t m = 0; m < nt; ++m)
            if ((tbits >> (nt - 1 - m)) & 1u) idx |= std::size_t{1} << (qubit_count - 1 - traced[m]);
        return idx;
    };

    BasicMatrix<T> out(std::size_t{1} << nk);
    for (std::size_t i = 0; i < out.dim(); ++i)
        for (std::size_t j = 0; j < out.dim(); ++j) {
            T s{};
            for (std::size_t t = 0; t < (std::size_t{1} << nt); ++t) s += rho(compose(i, t), compose(j, t));
            out(i, j) = s;
        }
    return out;
}

struct EigenSystem {
    std::vector<double> values;  // descending
    ComplexMatrix vectors;       // column k pairs with values[k]
};

namespace detail {

inline double offdiag_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j)
            if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
}

}  // namespace detail

// Cyclic complex Jacobi.
inline EigenSystem eig_hermitian(const ComplexMatrix& h, bool want_vectors = true) {
    const std::size_t n = h.dim();
    if (n > kMaxEigDim) throw SizeError("eig_hermitian supports dimension <= 64");
    if (!h.is_hermitian(1e-10)) throw ValidationError("eig_hermitian: matrix is not Hermitian");

    ComplexMatrix a = h;
    for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
    ComplexMatrix v = ComplexMatrix::identity(n);

    double scale = 0.0;
    for (const auto& x : a.data()) scale += std::norm(x);
    scale = std::max(1.0, std::sqrt(scale));

    const int max_sweeps = 100;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (detail::offdiag_norm(a) <= 1e-12 * scale) break;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) {
                const double mag = std::abs(a(p, q));
                if (mag < 1e-300) continue;
                const cplx phase = a(p, q) / mag;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // U = diag(1, conj(phase)) * [[c, s], [-s, c]]
                const cplx upp = c, upq = s;
                const cplx uqp = -s * std::conj(phase), uqq = c * std::conj(phase);
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * upp + akq * uqp;
                    a(k, q) = akp * upq + akq * uqq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
                    a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                if (want_vectors)
                    for (std::size_t k = 0; k < n; ++k) {
                        const cplx vkp = v(k, p), vkq = v(k, q);
                        v(k, p) = vkp * upp + vkq * uqp;
                        v(k, q) = vkp * upq + vkq * uqq;
                    }
            }
    }
    if (sweep == max_sweeps) throw NumericError("eig_hermitian: Jacobi iteration did not converge");

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() > a(y, y).real(); });
    EigenSystem out{std::vector<double>(n), ComplexMatrix(n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        if (want_vectors)
            for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
    }
    return out;
}

inline std::vector<double> eigvals_hermitian(const ComplexMatrix& h) { return eig_hermitian(h, false).values; }

// Closed-form eigenvalues of a 2x2 Hermitian block [[a, b], [conj b, d]], descending.
inline std::pair<double, double> eigvals_2x2(double a, double d, double abs_b) {
    const double m = 0.5 * (a + d);
    const double r = std::hypot(0.5 * (a - d), abs_b);
    return {m + r, m - r};
}

inline double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

inline double clamp_eigenvalue(double x) {
    if (x < -1e-10) throw ValidationError("negative eigenvalue " + std::to_string(x) + " beyond tolerance");
    return x < 0.0 ? 0.0 : x;
}

// -sum x log2 x over a spectrum that need not be normalized.
inline double spectrum_entropy(const std::vector<double>& spectrum) {
    double s = 0.0;
    for (double x : spectrum) s -= xlog2x(clamp_eigenvalue(x));
    return s;
}

// Entropy of an unnormalized PSD matrix's spectrum.
inline double matrix_spectrum_entropy(const ComplexMatrix& m) {
    if (m.dim() == 2) {
        auto [l0, l1] = eigvals_2x2(m(0, 0).real(), m(1, 1).real(), std::abs(m(0, 1)));
        return -xlog2x(clamp_eigenvalue(l0)) - xlog2x(clamp_eigenvalue(l1));
    }
    return spectrum_entropy(eigvals_hermitian(m));
}

inline double von_neumann_entropy(const ComplexMatrix& rho) {
    const double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > 1e-9) throw ValidationError("von_neumann_entropy: trace " + std::to_string(tr) + " != 1");
    return matrix_spectrum_entropy(rho);
}

inline double binary_entropy(double x) {
    if (!(x >= -1e-12 && x <= 1.0 + 1e-12)) throw DomainError("binary_entropy: argument outside [0,1]");
    x = std::clamp(x, 0.0, 1.0);
    return -xlog2x(x) - xlog2x(1.0 - x);
}

// Derivative of h at x in (0,1).
inline double binary_entropy_derivative(double x) { return std::log2((1.0 - x) / x); }

class ProbabilityVector {
public:
    ProbabilityVector(std::vector<double> weights) : w_(std::move(weights)) {
        if (w_.empty()) throw ValidationError("probability vector is empty");
        double s = 0.0;
        for (double& x : w_) {
            if (!std::isfinite(x) || x < -1e-12) throw ValidationError("probability weight below zero");
            if (x < 0.0) x = 0.0;
            s += x;
        }
        if (std::abs(s - 1.0) > 1e-9) throw ValidationError("probability weights sum to " + std::to_string(s));
    }
    ProbabilityVector(std::initializer_list<double> weights) : ProbabilityVector(std::vector<double>(weights)) {}

    const std::vector<double>& weights() const { return w_; }
    std::size_t size() const { return w_.size(); }
    double operator[](std::size_t i) const { return w_[i]; }

private:
    std::vector<double> w_;
};

inline double shannon_entropy(const ProbabilityVector& p) {
    double s = 0.0;
    for (double x : p.weights()) s -= xlog2x(x);
    return s;
}

}  // namespace dibound
