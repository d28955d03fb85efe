// dense.hpp — Small dense matrices: products, LU solves, Householder
// tridiagonalization, and a cyclic-Jacobi rotation eigensolver used as an
// independent oracle for the bisection path.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace jcasym {

template <class T>
class MatrixT {
public:
    MatrixT() = default;
    MatrixT(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static MatrixT identity(std::size_t n) {
        MatrixT m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    T* row(std::size_t i) { return a_.data() + i * cols_; }
    const T* row(std::size_t i) const { return a_.data() + i * cols_; }

    MatrixT& operator+=(const MatrixT& o) {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    MatrixT& operator-=(const MatrixT& o) {
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    MatrixT& operator*=(T s) {
        for (auto& x : a_) x *= s;
        return *this;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> a_;
};

using Matrix = MatrixT<double>;
using CMatrix = MatrixT<std::complex<double>>;

// ikj product, cache friendly enough for the block sizes used here
template <class T>
MatrixT<T> operator*(const MatrixT<T>& A, const MatrixT<T>& B) {
    if (A.cols() != B.rows()) throw std::invalid_argument("matrix product: shape mismatch");
    MatrixT<T> C(A.rows(), B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        T* ci = C.row(i);
        const T* ai = A.row(i);
        for (std::size_t k = 0; k < A.cols(); ++k) {
            const T aik = ai[k];
            if (aik == T{}) continue;
            const T* bk = B.row(k);
            for (std::size_t j = 0; j < B.cols(); ++j) ci[j] += aik * bk[j];
        }
    }
    return C;
}

template <class T>
MatrixT<T> operator+(MatrixT<T> A, const MatrixT<T>& B) { A += B; return A; }
template <class T>
MatrixT<T> operator-(MatrixT<T> A, const MatrixT<T>& B) { A -= B; return A; }

inline Matrix transpose(const Matrix& A) {
    Matrix T(A.cols(), A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) T(j, i) = A(i, j);
    return T;
}

inline CMatrix adjoint(const CMatrix& A) {
    CMatrix T(A.cols(), A.rows());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) T(j, i) = std::conj(A(i, j));
    return T;
}

template <class T>
double max_abs(const MatrixT<T>& A) {
    double m = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) m = std::max(m, std::abs(A(i, j)));
    return m;
}

template <class T>
double norm1(const MatrixT<T>& A) {  // max column sum
    double m = 0.0;
    for (std::size_t j = 0; j < A.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < A.rows(); ++i) s += std::abs(A(i, j));
        m = std::max(m, s);
    }
    return m;
}

inline double symmetry_defect(const Matrix& A) {
    double m = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = i + 1; j < A.cols(); ++j)
            m = std::max(m, std::abs(A(i, j) - A(j, i)));
    return m;
}

inline double antisymmetry_defect(const Matrix& A) {
    double m = 0.0;
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = i; j < A.cols(); ++j)
            m = std::max(m, std::abs(A(i, j) + A(j, i)));
    return m;
}

// max |(M^T M - I)(i,j)|
inline double orthogonality_defect(const Matrix& M) {
    const std::size_t n = M.rows();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double s = 0.0;
            for (std::size_t k = 0; k < n; ++k) s += M(k, i) * M(k, j);
            if (i == j) s -= 1.0;
            worst = std::max(worst, std::abs(s));
        }
    }
    return worst;
}

// Solve A X = B in place via LU with partial pivoting; returns X.
inline Matrix lu_solve(Matrix A, Matrix B) {
    const std::size_t n = A.rows();
    if (A.cols() != n || B.rows() != n) throw std::invalid_argument("lu_solve: shape mismatch");
    std::vector<std::size_t> piv(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        double best = std::abs(A(k, k));
        for (std::size_t i = k + 1; i < n; ++i)
            if (std::abs(A(i, k)) > best) { best = std::abs(A(i, k)); p = i; }
        if (best == 0.0) throw std::runtime_error("lu_solve: singular matrix");
        piv[k] = p;
        if (p != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(A(k, j), A(p, j));
            for (std::size_t j = 0; j < B.cols(); ++j) std::swap(B(k, j), B(p, j));
        }
        const double akk = A(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const double l = A(i, k) / akk;
            if (l == 0.0) continue;
            A(i, k) = l;
            for (std::size_t j = k + 1; j < n; ++j) A(i, j) -= l * A(k, j);
            for (std::size_t j = 0; j < B.cols(); ++j) B(i, j) -= l * B(k, j);
        }
    }
    for (std::size_t kk = n; kk-- > 0;) {
        for (std::size_t j = 0; j < B.cols(); ++j) {
            double s = B(kk, j);
            for (std::size_t m = kk + 1; m < n; ++m) s -= A(kk, m) * B(m, j);
            B(kk, j) = s / A(kk, kk);
        }
    }
    return B;
}

// Householder reduction of a symmetric matrix to tridiagonal form
// (eigenvalues only, no transform accumulation).
inline void householder_tridiagonalize(Matrix A, std::vector<double>& diag,
                                       std::vector<double>& offdiag) {
    const std::size_t n = A.rows();
    diag.assign(n, 0.0);
    offdiag.assign(n > 0 ? n - 1 : 0, 0.0);
    if (n == 0) return;
    std::vector<double> v(n), w(n);
    for (std::size_t k = 0; k + 2 < n; ++k) {
        double sigma = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) sigma += A(i, k) * A(i, k);
        sigma = std::sqrt(sigma);
        const double x0 = A(k + 1, k);
        if (sigma == 0.0) { offdiag[k] = 0.0; continue; }
        const double alpha = (x0 >= 0.0) ? -sigma : sigma;
        double vnorm2 = 0.0;
        v[k + 1] = x0 - alpha;
        vnorm2 += v[k + 1] * v[k + 1];
        for (std::size_t i = k + 2; i < n; ++i) { v[i] = A(i, k); vnorm2 += v[i] * v[i]; }
        if (vnorm2 == 0.0) { offdiag[k] = alpha; continue; }
        // w = 2 A v / |v|^2 ; then w -= (v.w/|v|^2) v ; A <- A - v w^T - w v^T
        for (std::size_t i = k + 1; i < n; ++i) {
            double s = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) s += A(i, j) * v[j];
            w[i] = 2.0 * s / vnorm2;
        }
        double vw = 0.0;
        for (std::size_t i = k + 1; i < n; ++i) vw += v[i] * w[i];
        const double c = vw / vnorm2;
        for (std::size_t i = k + 1; i < n; ++i) w[i] -= c * v[i];
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) A(i, j) -= v[i] * w[j] + w[i] * v[j];
        offdiag[k] = alpha;
        A(k + 1, k) = alpha;
    }
    for (std::size_t i = 0; i < n; ++i) diag[i] = A(i, i);
    if (n >= 2) offdiag[n - 2] = A(n - 1, n - 2);
}

// Cyclic two-sided Jacobi rotations; returns eigenvalues ascending.
// Chosen as a bit-level independent oracle for the Sturm bisection path.
// Accumulates eigenvectors (columns of *vectors) when requested.
inline std::vector<double> jacobi_eigenvalues(Matrix A, Matrix* vectors = nullptr,
                                              int max_sweeps = 64) {
    const std::size_t n = A.rows();
    if (A.cols() != n) throw std::invalid_argument("jacobi_eigenvalues: square matrix required");
    if (n > 2048) throw std::invalid_argument("jacobi_eigenvalues: size cap exceeded");
    Matrix V;
    if (vectors) V = Matrix::identity(n);
    double scale = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(A(i, j)));
    const double stop = (scale > 0 ? scale : 1.0) * 1e-15;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, std::abs(A(p, q)));
        if (off <= stop) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = A(p, q);
                if (std::abs(apq) <= stop * 1e-2) continue;
                const double tau = (A(q, q) - A(p, p)) / (2.0 * apq);
                const double t = (tau >= 0.0)
                                     ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                     : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (std::size_t k = 0; k < n; ++k) {
                    const double akp = A(k, p), akq = A(k, q);
                    A(k, p) = c * akp - s * akq;
                    A(k, q) = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const double apk = A(p, k), aqk = A(q, k);
                    A(p, k) = c * apk - s * aqk;
                    A(q, k) = s * apk + c * aqk;
                }
                if (vectors) {
                    for (std::size_t k = 0; k < n; ++k) {
                        const double vkp = V(k, p), vkq = V(k, q);
                        V(k, p) = c * vkp - s * vkq;
                        V(k, q) = s * vkp + c * vkq;
                    }
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (std::size_t i = 0; i < n; ++i) ev[i] = A(i, i);
    if (!vectors) {
        std::sort(ev.begin(), ev.end());
        return ev;
    }
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ev[a] < ev[b]; });
    std::vector<double> sorted(n);
    Matrix VS(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        sorted[j] = ev[order[j]];
        for (std::size_t i = 0; i < n; ++i) VS(i, j) = V(i, order[j]);
    }
    *vectors = VS;
    return sorted;
}

// Real embedding of a complex matrix: [[Re, -Im], [Im, Re]].
// Spectral data of M^H M survives the embedding, so the largest singular
// value of M can be read off the symmetric eigensolver.
inline Matrix real_embedding(const CMatrix& M) {
    const std::size_t r = M.rows(), c = M.cols();
    Matrix E(2 * r, 2 * c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            const double re = M(i, j).real(), im = M(i, j).imag();
            E(i, j) = re;
            E(i, j + c) = -im;
            E(i + r, j) = im;
            E(i + r, j + c) = re;
        }
    }
    return E;
}

}  // namespace jcasym
