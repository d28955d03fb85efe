// model.hpp — Entry model for Jaynes–Cummings type Jacobi operators:
// periodic diagonal modulation, power-law off-diagonal, smooth cutoffs,
// truncated/linearized entries, and the one-step eigenvalue predictor.

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace jcasym {

// d(k) = k + v(k), v periodic with period N;
// a(k) = a1 k^gamma + a1p k^(gamma-1), 0 < gamma <= 1/2, a1 > 0.
struct ModelParams {
    double gamma = 0.5;
    double a1 = 0.5;
    double a1p = 0.0;
    std::vector<double> v_table = {0.0};  // one period of v, index 1..N

    std::size_t period() const noexcept { return v_table.size(); }

    void validate() const {
        if (!(gamma > 0.0 && gamma <= 0.5))
            throw std::invalid_argument("ModelParams: gamma must lie in (0, 1/2]");
        if (!(a1 > 0.0)) throw std::invalid_argument("ModelParams: a1 must be positive");
        if (v_table.empty()) throw std::invalid_argument("ModelParams: v table must be nonempty");
    }

    // classic two-state modulation v(k) = (-1)^k rho
    static ModelParams jaynes_cummings(double rho = 0.25, double a1_ = 0.5) {
        ModelParams m;
        m.gamma = 0.5;
        m.a1 = a1_;
        m.v_table = {-rho, rho};
        return m;
    }
};

struct MeanDeviation {
    double mean = 0.0;   // <v>
    double rho = 0.0;    // max_k |v(k) - <v>|
    bool h1_ok = true;   // weak-dispersiveness flag (warning, not an error)
};

inline MeanDeviation mean_and_deviation(const ModelParams& m) {
    MeanDeviation r;
    const std::size_t N = m.period();
    double s = 0.0;
    for (double x : m.v_table) s += x;
    r.mean = s / static_cast<double>(N);
    for (double x : m.v_table) r.rho = std::max(r.rho, std::abs(x - r.mean));
    if (N == 1) r.h1_ok = true;
    else if (N == 2) r.h1_ok = r.rho < 0.5;
    else r.h1_ok = r.rho < 1.0 / (M_PI * std::sqrt(static_cast<double>(N)));
    return r;
}

inline double entry_v(long long k, const ModelParams& m) {
    const long long N = static_cast<long long>(m.period());
    long long r = (k - 1) % N;
    if (r < 0) r += N;
    return m.v_table[static_cast<std::size_t>(r)];
}

inline double entry_d(long long k, const ModelParams& m) {
    return static_cast<double>(k) + entry_v(k, m);
}

inline double entry_a(long long k, const ModelParams& m) {
    const double kd = static_cast<double>(k);
    double a = m.a1 * std::pow(kd, m.gamma);
    if (m.a1p != 0.0) a += m.a1p * std::pow(kd, m.gamma - 1.0);
    return a;
}

inline double delta_a(long long k, const ModelParams& m) {
    return entry_a(k + 1, m) - entry_a(k, m);
}

inline double forward_difference(const std::function<double(long long)>& seq, long long k,
                                 int order) {
    switch (order) {
        case 1: return seq(k + 1) - seq(k);
        case 2: return seq(k + 2) - 2.0 * seq(k + 1) + seq(k);
        default: throw std::invalid_argument("forward_difference: order must be 1 or 2");
    }
}

// Fixed smooth bump: 1 on [-inner, inner], 0 outside (-outer, outer),
// C-infinity partition profile on the transition band.
struct CutoffSpec {
    double inner = 1.0 / 6.0;
    double outer = 1.0 / 5.0;
};

namespace detail {
inline double smooth_step(double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double f = std::exp(-1.0 / x);
    const double g = std::exp(-1.0 / (1.0 - x));
    return f / (f + g);
}
}  // namespace detail

inline double theta0(double t, const CutoffSpec& c = {}) {
    const double a = std::abs(t);
    if (a <= c.inner) return 1.0;
    if (a >= c.outer) return 0.0;
    return detail::smooth_step((c.outer - a) / (c.outer - c.inner));
}

// theta0((s - n)/tau) for real arguments; lattice entries below use exact
// integer comparisons at the plateau/support thresholds instead.
inline double theta_cut(double s, double n, double tau, const CutoffSpec& c = {}) {
    return theta0((s - n) / tau, c);
}

// Lattice cutoff theta0((k - n)/n): 1 for 6|k-n| <= n, 0 for 5|k-n| >= n.
inline double theta_nn(long long k, long long n) {
    const long long j = std::llabs(k - n);
    if (6 * j <= n) return 1.0;
    if (5 * j >= n) return 0.0;
    return theta0(static_cast<double>(k - n) / static_cast<double>(n));
}

// Truncated+linearized off-diagonal: a(n) + (k-n) da(n) for |k-n| <= n/3,
// tapered by theta0((k-n)/2n), identically 0 for |k-n| >= 2n/5.
inline double entry_a_n(long long k, long long n, const ModelParams& m) {
    const long long j = k - n;
    const long long aj = std::llabs(j);
    if (5 * aj >= 2 * n) return 0.0;
    const double lin = entry_a(n, m) + static_cast<double>(j) * delta_a(n, m);
    if (3 * aj <= n) return lin;
    return lin * theta0(static_cast<double>(j) / static_cast<double>(2 * n));
}

// Compactly supported diagonal modulation v(k) theta0((k-n)/n)^2.
inline double entry_v_n(long long k, long long n, const ModelParams& m) {
    const long long aj = std::llabs(k - n);
    if (5 * aj >= n) return 0.0;
    const double vv = entry_v(k, m);
    if (6 * aj <= n) return vv;
    const double th = theta0(static_cast<double>(k - n) / static_cast<double>(n));
    return vv * th * th;
}

inline double entry_d_n(long long k, long long n, const ModelParams& m) {
    return static_cast<double>(k) + entry_v_n(k, n, m);
}

// a_{1,n}(k) = a_n(k-1)^2 - a_n(k)^2, the diagonal correction produced by
// one conjugation step.
inline double entry_a1n(long long k, long long n, const ModelParams& m) {
    const double am = entry_a_n(k - 1, n, m);
    const double ak = entry_a_n(k, n, m);
    return am * am - ak * ak;
}

// Predictor l_n(k) = k + a_n(k-1)^2 - a_n(k)^2; equals k outside the
// truncation support, and l(n) := l_n(n) predicts the n-th eigenvalue.
inline double predictor_l_n(long long k, long long n, const ModelParams& m) {
    return static_cast<double>(k) + entry_a1n(k, n, m);
}

inline double predictor_l_of_n(long long n, const ModelParams& m) {
    return predictor_l_n(n, n, m);
}

// Largest lattice offset with nonzero truncated off-diagonal: 5|j| < 2n.
inline long long support_halfwidth_a_n(long long n) { return (2 * n - 1) / 5; }

// Smallest K with a_n(k) = 0 for all k >= K.
inline long long decoupling_index(long long n) { return n + support_halfwidth_a_n(n) + 1; }

}  // namespace jcasym
