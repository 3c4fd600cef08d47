#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "fht/symbol.hpp"
#include "fht/util.hpp"

namespace fht {

struct WHDiagnostics {
    int s_nodes = 0;
    double u_min = 0.0, u_max = 0.0;
    double s_tolerance = 0.0;  // achieved probe convergence of the S quadrature
    int fft_size = 0;
    double aliasing = 0.0;  // Nyquist-band coefficient magnitude / max coefficient
};

struct WHEigenvector {
    FHParams params;
    cplx eps;
    cplx z_c;
    std::vector<cplx> coeffs;
    cplx C = 1.0;
    WHDiagnostics diag;
};

struct ComparisonReport {
    cplx C;
    int window_lo = 0, window_hi = 0;
    std::vector<double> abs_err;  // |C psi_wh_j - psi_j|
    std::vector<double> rel_err;  // |psi_j / (C psi_wh_j) - 1|, NaN where undefined
};

// nu = -1 Wiener-Hopf factorization of a(z) - eps: G+(z) = ln(z - z_c) + S(z)
// up to an additive constant, with S the cut integral evaluated on a fixed
// quadrature table (substitution t = 1 + e^u).
class WHFactorization {
  public:
    WHFactorization(const FHParams& params, cplx eps, cplx z0_hint = 0.0)
        : params_(params), eps_(eps) {
        if (winding_number(params, eps, 4096) != -1)
            throw std::runtime_error(
                "WHFactorization: winding number != -1, only trivial solutions exist");
        z_c_ = solve_zc(params, eps, z0_hint != cplx(0.0) ? z0_hint : default_z0());
        build_table();
    }

    cplx z_c() const { return z_c_; }
    cplx eps() const { return eps_; }
    const WHDiagnostics& diag() const { return diag_; }

    // (1/2 pi i) int_1^inf dt/(t-z) ln[ (m(t) e^{-i(b+a)pi} - eps) /
    //                                   (m(t) e^{+i(b+a)pi} - eps) ]
    cplx s_integral(cplx z) const {
        // t - z evaluated as (1 - z) + e^u so the t -> 1+ tail stays accurate
        // even when 1 + e^u rounds to 1
        cplx one_minus_z = 1.0 - z;
        cplx sum = 0.0;
        for (std::size_t i = 0; i < em_.size(); ++i) {
            if (numer_[i] == cplx(0.0)) continue;  // integrand vanishes; avoid 0/0 at t=z=1
            sum += numer_[i] / (one_minus_z + em_[i]);
        }
        return sum * h_ / cplx(0.0, 2.0 * pi);
    }

    cplx g_plus(cplx z) const { return std::log(z - z_c_) + s_integral(z); }

    std::vector<cplx> psi_wh_coeffs(int j_max, unsigned threads = 0) const {
        return circle_coeffs(j_max, true, threads);
    }

    std::vector<cplx> psi_s_coeffs(int j_max, unsigned threads = 0) const {
        return circle_coeffs(j_max, false, threads);
    }

  private:
    FHParams params_;
    cplx eps_;
    cplx z_c_;
    std::vector<double> em_;     // e^{u_i}; nodes t_i = 1 + e^{u_i}
    std::vector<cplx> numer_;    // ln-ratio(t_i) * e^{u_i}
    double h_ = 0.0;
    mutable WHDiagnostics diag_;

    cplx default_z0() const {
        double best = 1e300;
        double theta_best = pi;
        for (int k = 1; k < 512; ++k) {
            double theta = 2.0 * pi * k / 512;
            double d = std::abs(symbol_circle(params_, theta) - eps_);
            if (d < best) {
                best = d;
                theta_best = theta;
            }
        }
        cplx z0 = std::polar(1.01, theta_best);
        if (z0.imag() == 0.0 && z0.real() > 0.0) z0 += cplx(0.0, 1e-12);
        return z0;
    }

    // ln-ratio at the node t = 1 + e^u, given the previous (larger-t)
    // unwrapped value for branch continuity.
    cplx ln_ratio(double u, const cplx* prev) const {
        double a = params_.alpha, b = params_.beta;
        double log_t = u > 0.0 ? u + std::log1p(std::exp(-u)) : std::log1p(std::exp(u));
        double lm = 2.0 * a * u + (b - a) * log_t;
        cplx m = std::exp(cplx(lm, 0.0));
        cplx phase = std::exp(cplx(0.0, -(b + a) * pi));
        cplx num = m * phase - eps_;
        cplx den = m * std::conj(phase) - eps_;
        if (num == cplx(0.0) || den == cplx(0.0))
            throw std::runtime_error("WHFactorization: eps on the one-sided symbol limit");
        cplx lr = std::log(num / den);
        if (prev) {
            double k = std::round((prev->imag() - lr.imag()) / (2.0 * pi));
            lr += cplx(0.0, 2.0 * pi * k);
            if (std::abs(lr.imag() - prev->imag()) > pi)
                throw std::runtime_error("WHFactorization: branch jump > pi, refine grid");
        }
        return lr;
    }

    void build_table() {
        double a = params_.alpha, b = params_.beta;
        // integrand per unit u ~ e^{(2a+1)u} as u -> -inf and ~ e^{(a+b)u} as
        // u -> +inf (requires a+b < 0, guaranteed by the winding gate)
        double u_min = std::log(1e-20) / (2.0 * a + 1.0) - 20.0;
        double decay = std::min(a + b, -1e-3);
        double u_max = std::min(std::log(1e-20) / decay + 20.0, 600.0);
        int m = 4096;
        cplx probe_prev[3];
        bool have_prev = false;
        for (int it = 0; it < 7; ++it, m *= 2) {
            fill_table(u_min, u_max, m);
            cplx probe[3] = {s_integral(0.0), s_integral(-0.5), s_integral(cplx(0.0, 0.7))};
            if (have_prev) {
                double d = 0.0;
                for (int i = 0; i < 3; ++i) d = std::max(d, std::abs(probe[i] - probe_prev[i]));
                diag_.s_tolerance = d;
                if (d < 1e-12) return;
            }
            for (int i = 0; i < 3; ++i) probe_prev[i] = probe[i];
            have_prev = true;
        }
        throw std::runtime_error("WHFactorization: S quadrature did not converge");
    }

    void fill_table(double u_min, double u_max, int m) {
        em_.resize(m);
        numer_.resize(m);
        h_ = (u_max - u_min) / (m - 1);
        // branch tracked by continuity from t -> inf where the ratio -> 1
        cplx prev;
        bool first = true;
        for (int i = m - 1; i >= 0; --i) {
            double u = u_min + i * h_;
            cplx lr = ln_ratio(u, first ? nullptr : &prev);
            prev = lr;
            first = false;
            em_[i] = std::exp(u);
            numer_[i] = lr * em_[i];
        }
        diag_.s_nodes = m;
        diag_.u_min = u_min;
        diag_.u_max = u_max;
    }

    // Fourier coefficients of exp(-G+) (with_pole_factor) or exp(-S) on |z|=1.
    std::vector<cplx> circle_coeffs(int j_max, bool with_pole_factor,
                                    unsigned threads) const {
        if (j_max < 8) throw std::invalid_argument("circle_coeffs: j_max >= 8 required");
        std::size_t M = next_pow2(32 * static_cast<std::size_t>(j_max));
        const std::size_t M_cap = std::size_t(1) << 18;
        while (true) {
            std::vector<cplx> samples(M);
            parallel_for(
                0, M,
                [&](std::size_t lo, std::size_t hi) {
                    for (std::size_t k = lo; k < hi; ++k) {
                        double theta = 2.0 * pi * static_cast<double>(k) / static_cast<double>(M);
                        cplx z = std::polar(1.0, theta);
                        if (k == 0) z = 1.0;  // S integrable there; pole factor regular
                        cplx v = std::exp(-s_integral(z));
                        if (with_pole_factor) v /= (z - z_c_);
                        samples[k] = v;
                    }
                },
                threads);
            fft_radix2(samples);
            double inv_m = 1.0 / static_cast<double>(M);
            double peak = 0.0;
            for (int j = 0; j < j_max; ++j)
                peak = std::max(peak, std::abs(samples[j]) * inv_m);
            double nyq = 0.0;
            for (std::size_t j = M / 2 - 16; j <= M / 2 + 16; ++j)
                nyq = std::max(nyq, std::abs(samples[j]) * inv_m);
            diag_.fft_size = static_cast<int>(M);
            diag_.aliasing = nyq / peak;
            if (nyq <= 1e-8 * peak || M >= M_cap) {
                if (nyq > 1e-8 * peak)
                    throw std::runtime_error(
                        "WHFactorization: aliasing estimate above 1e-8 at the size cap");
                std::vector<cplx> out(j_max);
                for (int j = 0; j < j_max; ++j) out[j] = samples[j] * inv_m;
                return out;
            }
            M *= 2;
        }
    }
};

inline cplx s_integral(const FHParams& p, cplx eps, cplx z) {
    return WHFactorization(p, eps).s_integral(z);
}

inline cplx g_plus(const FHParams& p, cplx eps, cplx z) {
    return WHFactorization(p, eps).g_plus(z);
}

inline std::vector<cplx> psi_wh_coeffs(const FHParams& p, cplx eps, int j_max) {
    return WHFactorization(p, eps).psi_wh_coeffs(j_max);
}

inline std::vector<cplx> psi_s_coeffs(const FHParams& p, cplx eps, int j_max) {
    return WHFactorization(p, eps).psi_s_coeffs(j_max);
}

// Least-squares match of the single constant C over the window, then per-j
// errors of C * wh against the exact vector.
inline ComparisonReport compare_with_exact(const std::vector<cplx>& wh,
                                           const std::vector<cplx>& exact, int window_lo,
                                           int window_hi) {
    if (window_lo < 0 || window_hi >= static_cast<int>(exact.size()) ||
        window_hi >= static_cast<int>(wh.size()) || window_lo >= window_hi)
        throw std::invalid_argument("compare_with_exact: bad window");
    cplx num = 0.0, den = 0.0;
    for (int j = window_lo; j <= window_hi; ++j) {
        num += std::conj(wh[j]) * exact[j];
        den += std::conj(wh[j]) * wh[j];
    }
    ComparisonReport rep;
    rep.C = num / den;
    rep.window_lo = window_lo;
    rep.window_hi = window_hi;
    std::size_t n = std::min(wh.size(), exact.size());
    rep.abs_err.resize(n);
    rep.rel_err.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        cplx w = rep.C * wh[j];
        rep.abs_err[j] = std::abs(w - exact[j]);
        rep.rel_err[j] = std::abs(w) > 1e-14 ? std::abs(exact[j] / w - 1.0)
                                             : std::nan("");
    }
    return rep;
}

struct ShiftFactorization {
    cplx eps;
    std::vector<cplx> k_plus;  // 1 - eps z
    std::vector<cplx> k_minus; // 1
    // psi_j = C eps^j
    cplx psi(int j, cplx C = 1.0) const { return C * std::pow(eps, j); }
};

// Exact factorization of K(z) = z^{-1} - eps as K+ / (z K-), the module's
// closed-form anchor.
inline ShiftFactorization shift_example_factorization(cplx eps) {
    if (std::abs(eps) >= 1.0)
        throw std::domain_error("shift_example_factorization: need |eps| < 1");
    return {eps, {1.0, -eps}, {1.0}};
}

}  // namespace fht
