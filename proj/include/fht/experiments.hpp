#pragma once

#include <cmath>
#include <vector>

#include "fht/asymptotics.hpp"
#include "fht/quasiparticle.hpp"
#include "fht/wienerhopf.hpp"

namespace fht {

inline SpectralDecomposition full_decomposition(const FHParams& p, int N) {
    return normalize_biorthogonal(label_spectrum(eig_dense(build_matrix(p, N))));
}

struct WHCompareRun {
    int N = 0;
    int l = 0;
    cplx eps;
    cplx z_c;
    cplx C;
    WHDiagnostics diag;
    std::vector<cplx> exact;   // normalized finite-N eigenvector
    std::vector<cplx> coeffs;  // quadrature coefficients, unscaled
    ComparisonReport report;
};

inline WHCompareRun wh_compare_run(const FHParams& p, int N, int l,
                                   unsigned threads = 0) {
    auto d = full_decomposition(p, N);
    const auto& e = d.entries[l];
    double theta = 2.0 * pi * l / (N - 1);
    WHFactorization wh(p, e.eigenvalue, std::polar(1.0 + 3.0 / N, -theta));
    WHCompareRun run;
    run.N = N;
    run.l = l;
    run.eps = e.eigenvalue;
    run.z_c = wh.z_c();
    run.exact = e.psi;
    run.coeffs = wh.psi_wh_coeffs(N, threads);
    run.diag = wh.diag();
    int lo = static_cast<int>(std::floor(0.2 * N));
    int hi = static_cast<int>(std::floor(0.5 * N));
    run.report = compare_with_exact(run.coeffs, run.exact, lo, hi);
    run.C = run.report.C;
    return run;
}

struct ShiftRow {
    int N = 0;
    int l = 0;
    cplx measured;   // (eps - grid value) / eps
    cplx predicted;  // shift formula with the fitted decay constant
    double rel_dev = 0.0;
};

struct ShiftConvergence {
    std::vector<ShiftRow> rows;
    double im_C = 0.0;  // anchored-fit constant feeding the predicted momentum
};

// Measured relative eigenvalue shift vs the closed-form estimate. The O(1/N)
// constant in the decay-rate law is not predicted; it is fitted (anchored at
// the largest N) from the same runs and fed into the momentum estimate.
inline ShiftConvergence shift_convergence(const FHParams& p, const std::vector<int>& Ns,
                                          double l_frac) {
    ShiftConvergence out;
    std::vector<std::pair<int, double>> fit_pts;
    std::vector<ShiftRow> rows;
    std::vector<cplx> eps_list, grid_list;
    for (int N : Ns) {
        int l = static_cast<int>(std::floor(l_frac * N)) - 1;
        auto d = full_decomposition(p, N);
        MomentumRecord r = momentum_record(d, l);
        fit_pts.push_back({N, r.p_psi.imag() * N});
        double theta = 2.0 * pi * l / (N - 1);
        cplx grid = symbol_circle(p, 2.0 * pi - theta);
        ShiftRow row;
        row.N = N;
        row.l = l;
        row.measured = (d.entries[l].eigenvalue - grid) / d.entries[l].eigenvalue;
        rows.push_back(row);
    }
    auto fit = fit_log_law(fit_pts, 2.0 * p.alpha + 1.0);
    out.im_C = fit.C;
    for (auto& row : rows) {
        double theta = 2.0 * pi * row.l / (row.N - 1);
        double im_p = ((2.0 * p.alpha + 1.0) * std::log(row.N) + out.im_C) / row.N;
        // closed-form shift scaled to the fitted decay rate: the bare formula
        // carries only the leading (2 alpha + 1) ln N / N factor, while the
        // measured momentum includes the fitted O(1/N) constant as well
        double bare = predicted_im_p(p.alpha, row.N);
        row.predicted = eigenvalue_shift(p, cplx(theta, im_p), row.N) * (im_p / bare);
        row.rel_dev = std::abs(row.measured - row.predicted) / std::abs(row.predicted);
        out.rows.push_back(row);
    }
    return out;
}

struct OverlayRow {
    int j = 0;
    double abs_exact = 0.0;
    double abs_two_term = 0.0;
    double abs_exp_term = 0.0;
    double abs_tail_term = 0.0;
};

struct TwoTermOverlay {
    cplx A;
    cplx B;
    cplx z_c;
    cplx scale;  // least-squares match of the model onto the exact eigenvector
    double balance_exp = 0.0;   // |A z_c^{-N}|
    double balance_tail = 0.0;  // |B N^{-(2 alpha + 1)}|
    std::vector<OverlayRow> rows;
};

inline TwoTermOverlay two_term_overlay(const FHParams& p, int N, int l) {
    auto d = full_decomposition(p, N);
    const auto& e = d.entries[l];
    double theta = 2.0 * pi * l / (N - 1);
    cplx z0 = std::polar(1.0 + 3.0 / N, -theta);
    cplx zc = solve_zc(p, e.eigenvalue, z0);
    TwoTermOverlay ov;
    ov.z_c = zc;
    ov.A = coeff_A(p, e.eigenvalue, zc);
    ov.B = coeff_B(p, e.eigenvalue, zc, N / 2);
    TwoTermModel model{ov.A, ov.B, zc, p.alpha, p.beta};
    int lo = static_cast<int>(std::floor(0.2 * N));
    int hi = static_cast<int>(std::floor(0.5 * N));
    cplx num = 0.0, den = 0.0;
    for (int j = lo; j <= hi; ++j) {
        cplx m = psi_two_term(model, j);
        num += std::conj(m) * e.psi[j];
        den += std::conj(m) * m;
    }
    ov.scale = num / den;
    ov.balance_exp = std::abs(ov.A * std::pow(zc, -static_cast<double>(N)));
    ov.balance_tail =
        std::abs(ov.B) * std::pow(static_cast<double>(N), -(2.0 * p.alpha + 1.0));
    for (int j = 0; j < N; ++j) {
        OverlayRow row;
        row.j = j;
        row.abs_exact = std::abs(e.psi[j]);
        row.abs_two_term = std::abs(ov.scale * psi_two_term(model, j));
        row.abs_exp_term =
            std::abs(ov.scale * ov.A * std::pow(zc, static_cast<double>(-j - 1)));
        row.abs_tail_term =
            std::abs(ov.scale * ov.B) * std::pow(j + 1.0, -(2.0 * p.alpha + 1.0));
        ov.rows.push_back(row);
    }
    return ov;
}

// Complex least-squares fit of coefficients onto the two-term basis
// {z_c^{-j-1}, (j+1)^{-(2 alpha + 1)}} over [j_lo, j_hi].
inline TwoTermModel fit_two_term(const FHParams& p, cplx z_c,
                                 const std::vector<cplx>& coeffs, int j_lo, int j_hi) {
    cplx s11 = 0, s12 = 0, s22 = 0, r1 = 0, r2 = 0;
    for (int j = j_lo; j <= j_hi; ++j) {
        cplx b1 = std::pow(z_c, static_cast<double>(-j - 1));
        cplx b2 = std::pow(j + 1.0, -(2.0 * p.alpha + 1.0));
        s11 += std::conj(b1) * b1;
        s12 += std::conj(b1) * b2;
        s22 += std::conj(b2) * b2;
        r1 += std::conj(b1) * coeffs[j];
        r2 += std::conj(b2) * coeffs[j];
    }
    cplx det = s11 * s22 - s12 * std::conj(s12);
    cplx A = (s22 * r1 - s12 * r2) / det;
    cplx B = (s11 * r2 - std::conj(s12) * r1) / det;
    return {A, B, z_c, p.alpha, p.beta};
}

}  // namespace fht
