// operators.hpp — Finite matrix realizations of the model operators:
// Dirichlet sections, exactly decoupled truncations, window variants, and
// the symmetric/skew generator pair with its commutator identities.

#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "jcasym/dense.hpp"
#include "jcasym/model.hpp"

namespace jcasym {

// Symmetric tridiagonal block with a lattice offset: row i describes index
// offset + i of the full operator.
struct TridiagonalWindow {
    long long offset = 1;
    std::vector<double> diag;
    std::vector<double> offdiag;  // size() == diag.size() - 1

    std::size_t size() const noexcept { return diag.size(); }

    void validate() const {
        if (diag.empty()) throw std::invalid_argument("TridiagonalWindow: empty diagonal");
        if (offdiag.size() + 1 != diag.size())
            throw std::invalid_argument("TridiagonalWindow: offdiag length mismatch");
    }
};

// CSV layout: k,diag,offdiag (offdiag blank on the last row)
inline void write_csv(const TridiagonalWindow& T, std::ostream& out) {
    out << "k,diag,offdiag\n";
    char buf[64];
    for (std::size_t i = 0; i < T.size(); ++i) {
        out << (T.offset + static_cast<long long>(i)) << ',';
        std::snprintf(buf, sizeof buf, "%.15g", T.diag[i]);
        out << buf << ',';
        if (i + 1 < T.size()) {
            std::snprintf(buf, sizeof buf, "%.15g", T.offdiag[i]);
            out << buf;
        }
        out << '\n';
    }
}

// Truncated operator in exactly decoupled form: a finite block over [1, K]
// plus a diagonal integer tail starting at tail_start = K + 1. The spectrum
// is the block spectrum united with {k : k >= tail_start}, exactly.
struct DecoupledJn {
    TridiagonalWindow block;
    long long tail_start = 0;
};

// Dirichlet section of the full operator on [1, size].
inline TridiagonalWindow build_J_plus(const ModelParams& m, std::size_t size) {
    if (size == 0) throw std::invalid_argument("build_J_plus: size must be >= 1");
    TridiagonalWindow T;
    T.offset = 1;
    T.diag.resize(size);
    T.offdiag.resize(size - 1);
    for (std::size_t i = 0; i < size; ++i) {
        const long long k = 1 + static_cast<long long>(i);
        T.diag[i] = entry_d(k, m);
        if (i + 1 < size) T.offdiag[i] = entry_a(k, m);
    }
    return T;
}

namespace detail {
template <class DiagFn, class OffFn>
DecoupledJn build_decoupled(long long n, DiagFn diag, OffFn off) {
    if (n < 5) throw std::invalid_argument("decoupled build: n must be >= 5");
    // scan for the smallest K with vanishing off-diagonal at and beyond K
    long long K = decoupling_index(n);
    while (K > 1 && off(K - 1) == 0.0) --K;
    DecoupledJn J;
    J.tail_start = K + 1;
    J.block.offset = 1;
    J.block.diag.resize(static_cast<std::size_t>(K));
    J.block.offdiag.resize(static_cast<std::size_t>(K - 1));
    for (long long k = 1; k <= K; ++k) {
        J.block.diag[static_cast<std::size_t>(k - 1)] = diag(k);
        if (k < K) J.block.offdiag[static_cast<std::size_t>(k - 1)] = off(k);
    }
    return J;
}
}  // namespace detail

inline DecoupledJn build_Jn_plus(const ModelParams& m, long long n) {
    return detail::build_decoupled(
        n, [&](long long k) { return entry_d_n(k, n, m); },
        [&](long long k) { return entry_a_n(k, n, m); });
}

// Same truncation with the unmodulated diagonal k.
inline TridiagonalWindow build_J0n_plus(const ModelParams& m, long long n, std::size_t size) {
    if (size == 0) throw std::invalid_argument("build_J0n_plus: size must be >= 1");
    TridiagonalWindow T;
    T.offset = 1;
    T.diag.resize(size);
    T.offdiag.resize(size - 1);
    for (std::size_t i = 0; i < size; ++i) {
        const long long k = 1 + static_cast<long long>(i);
        T.diag[i] = static_cast<double>(k);
        if (i + 1 < size) T.offdiag[i] = entry_a_n(k, n, m);
    }
    return T;
}

// Window variant: exact off-diagonal a(k) on [n - C1 n^gamma, n + C1 n^gamma],
// truncated entries a_n(k) elsewhere.
inline double entry_a_window(long long k, long long n, double C1, const ModelParams& m) {
    const double w = C1 * std::pow(static_cast<double>(n), m.gamma);
    if (std::abs(static_cast<double>(k - n)) <= w && k >= 1) return entry_a(k, m);
    return entry_a_n(k, n, m);
}

inline DecoupledJn build_Jtilde_plus(const ModelParams& m, long long n, double C1) {
    if (C1 < 0.0) throw std::invalid_argument("build_Jtilde_plus: C1 must be >= 0");
    const double w = C1 * std::pow(static_cast<double>(n), m.gamma);
    const long long hi = n + static_cast<long long>(std::floor(w));
    if (n - static_cast<long long>(std::floor(w)) < 1)
        throw std::invalid_argument("build_Jtilde_plus: window extends below index 1");
    DecoupledJn J = detail::build_decoupled(
        n, [&](long long k) { return entry_d_n(k, n, m); },
        [&](long long k) { return entry_a_window(k, n, C1, m); });
    if (J.tail_start <= hi)  // the exact entries never vanish inside the window
        throw std::logic_error("build_Jtilde_plus: decoupling scan inconsistent");
    return J;
}

// Symmetric zero-diagonal part A and real skew generator G over [1, size]:
// A(k,k+1) = a_n(k), G(k,k+1) = -a_n(k), G(k+1,k) = a_n(k).
// The block must contain the full support of a_n so that the commutator
// identities [Lambda, G] = A and [G, A] = 2 a_{1,n}(Lambda) hold exactly.
struct GeneratorPair {
    Matrix A;  // symmetric tridiagonal, zero diagonal
    Matrix G;  // antisymmetric tridiagonal
};

inline GeneratorPair build_An_Bn(const ModelParams& m, long long n, std::size_t size) {
    const long long K = decoupling_index(n);
    if (static_cast<long long>(size) < K)
        throw std::invalid_argument("build_An_Bn: size below the decoupling index breaks exactness");
    GeneratorPair P{Matrix(size, size), Matrix(size, size)};
    for (std::size_t i = 0; i + 1 < size; ++i) {
        const long long k = 1 + static_cast<long long>(i);
        const double a = entry_a_n(k, n, m);
        P.A(i, i + 1) = a;
        P.A(i + 1, i) = a;
        P.G(i, i + 1) = -a;
        P.G(i + 1, i) = a;
    }
    return P;
}

inline Matrix dense_from_tridiagonal(const TridiagonalWindow& T) {
    const std::size_t n = T.size();
    Matrix M(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        M(i, i) = T.diag[i];
        if (i + 1 < n) {
            M(i, i + 1) = T.offdiag[i];
            M(i + 1, i) = T.offdiag[i];
        }
    }
    return M;
}

}  // namespace jcasym
