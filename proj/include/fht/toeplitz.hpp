#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fht/specialfn.hpp"
#include "fht/symbol.hpp"

namespace fht {

struct ToeplitzMatrix {
    int N = 0;
    FHParams params;
    std::vector<double> diagonals;  // offset n = j-k in [-(N-1), N-1]

    double diag(int n) const { return diagonals[n + N - 1]; }
    double operator()(int j, int k) const { return diag(j - k); }

    std::vector<double> dense() const {
        std::vector<double> a(static_cast<std::size_t>(N) * N);
        for (int j = 0; j < N; ++j)
            for (int k = 0; k < N; ++k) a[static_cast<std::size_t>(j) * N + k] = diag(j - k);
        return a;
    }
};

// T(n) = (-1)^n Gamma(2a+1) / (Gamma(a+1+b-n) Gamma(a+1-b+n)); exact zero when
// a denominator gamma sits at a pole.
inline double element(const FHParams& p, long n) {
    if (p.alpha <= -0.5) throw std::domain_error("element: requires alpha > -1/2");
    double lg_num = log_gamma_real(2.0 * p.alpha + 1.0);
    LogInvGamma d1 = log_inv_gamma(p.alpha + 1.0 + p.beta - static_cast<double>(n));
    LogInvGamma d2 = log_inv_gamma(p.alpha + 1.0 - p.beta + static_cast<double>(n));
    double sgn = d1.sign * d2.sign;
    if (sgn == 0.0) return 0.0;
    double sign_n = (n % 2 == 0) ? 1.0 : -1.0;
    return sign_n * sgn * std::exp(lg_num + d1.log_abs + d2.log_abs);
}

// Trapezoid approximation of (1/2pi) \int_0^{2pi} a(e^{i t}) e^{-i n t} dt at
// fixed m (uniform periodic grid).
inline cplx element_numeric_fixed(const FHParams& p, long n, int m) {
    if (m < 256) throw std::invalid_argument("element_numeric: m < 256");
    cplx sum = 0.0;
    // t = 0 endpoint: the symbol vanishes for alpha > 0 and equals
    // cos(pi beta) - i sin(pi beta) continued from above for alpha = 0; the
    // periodic rule takes the one-sided value.
    if (p.alpha <= 0.0) sum += std::polar(1.0, -p.beta * pi);
    for (int k = 1; k < m; ++k) {
        double t = 2.0 * pi * k / m;
        sum += symbol_circle(p, t) * std::polar(1.0, -static_cast<double>(n) * t);
    }
    return sum / static_cast<double>(m);
}

// Doubles m until two successive trapezoid values agree to 1e-10.
inline cplx element_numeric(const FHParams& p, long n, int m) {
    cplx prev = element_numeric_fixed(p, n, m);
    for (int it = 0; it < 14; ++it) {
        m *= 2;
        cplx cur = element_numeric_fixed(p, n, m);
        if (std::abs(cur - prev) < 1e-10) return cur;
        prev = cur;
    }
    return prev;
}

// Large-|n| law: -Gamma(2a+1) sin(pi(a+b)) / (pi (n+b)^{2a+1}) for n > 0 and
// the beta -> -beta reflection for n < 0. The base is |n+b| with the overall
// sign fixed by matching element() (branch for negative offsets is a recorded
// convention, not closed-form ground truth).
inline double element_asymptotic(const FHParams& p, long n) {
    if (n == 0) throw std::invalid_argument("element_asymptotic: |n| >= 1 required");
    double g = std::exp(log_gamma_real(2.0 * p.alpha + 1.0));
    double s = (n > 0) ? std::sin(pi * (p.alpha + p.beta)) : std::sin(pi * (p.alpha - p.beta));
    double base = std::abs(static_cast<double>(n) + p.beta);
    return -g * s / (pi * std::pow(base, 2.0 * p.alpha + 1.0));
}

inline ToeplitzMatrix build_matrix(const FHParams& p, int N) {
    if (N < 2) throw std::invalid_argument("build_matrix: N >= 2 required");
    ToeplitzMatrix t;
    t.N = N;
    t.params = p;
    t.diagonals.resize(2 * N - 1);
    for (int n = -(N - 1); n <= N - 1; ++n) t.diagonals[n + N - 1] = element(p, n);
    return t;
}

struct OperatorResult {
    std::vector<cplx> values;
    double truncation_tail;  // sum_{k>M} |T(j-k)| bound estimate
};

// (sum_k T(j-k) vec_k) for j = 0..j_max-1 with truncation at M = vec.size().
inline OperatorResult apply_operator(const FHParams& p, const std::vector<cplx>& vec,
                                     int j_max) {
    std::size_t M = vec.size();
    if (M < 4 * static_cast<std::size_t>(j_max))
        throw std::invalid_argument("apply_operator: need M >= 4*j_max");
    std::vector<double> t(M + j_max);
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = element(p, static_cast<long>(j_max) - 1 - static_cast<long>(i));
    OperatorResult out;
    out.values.resize(j_max);
    for (int j = 0; j < j_max; ++j) {
        cplx s = 0.0;
        const double* trow = t.data() + (j_max - 1 - j);
        for (std::size_t k = 0; k < M; ++k) s += trow[k] * vec[k];
        out.values[j] = s;
    }
    // |T(n)| ~ c n^{-(2a+1)}  =>  sum_{k>M} ~ c M^{-2a} / (2a)
    double c = std::abs(element_asymptotic(p, static_cast<long>(M)));
    out.truncation_tail = (p.alpha > 0.0)
                              ? c * static_cast<double>(M) / (2.0 * p.alpha)
                              : c * static_cast<double>(M);
    return out;
}

}  // namespace fht
