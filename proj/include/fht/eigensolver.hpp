#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <lapacke.h>

#include "fht/toeplitz.hpp"

namespace fht {

struct RawEigenpairs {
    int N = 0;
    FHParams params;
    std::vector<cplx> eigenvalues;
    std::vector<std::vector<cplx>> right;  // right[i][j], unit 2-norm as returned
};

struct SpectralEntry {
    int l = 0;
    cplx eigenvalue;
    std::vector<cplx> psi;        // right eigenvector
    double grid_distance = 0.0;   // |eps - a(e^{-2 pi i l/(N-1)})|
};

struct SpectralDecomposition {
    int N = 0;
    FHParams params;
    std::vector<SpectralEntry> entries;  // sorted by label l = 0..N-1

    // left eigenvector = index-reversed right eigenvector
    cplx psi_left(int l, int j) const { return entries[l].psi[N - 1 - j]; }
};

// Dense nonsymmetric eigendecomposition (LAPACK dgeev); conjugate pairs are
// reassembled into complex vectors.
inline RawEigenpairs eig_dense(const ToeplitzMatrix& t, int cap = 2000) {
    int N = t.N;
    if (N > cap) throw std::invalid_argument("eig_dense: N exceeds configured cap");
    std::vector<double> a = t.dense();
    std::vector<double> wr(N), wi(N), vr(static_cast<std::size_t>(N) * N);
    int info = LAPACKE_dgeev(LAPACK_ROW_MAJOR, 'N', 'V', N, a.data(), N, wr.data(),
                             wi.data(), nullptr, N, vr.data(), N);
    if (info != 0)
        throw std::runtime_error("eig_dense: dgeev failed, info=" + std::to_string(info) +
                                 " (alpha=" + std::to_string(t.params.alpha) +
                                 ", beta=" + std::to_string(t.params.beta) +
                                 ", N=" + std::to_string(N) + ")");
    RawEigenpairs out;
    out.N = N;
    out.params = t.params;
    out.eigenvalues.resize(N);
    out.right.assign(N, std::vector<cplx>(N));
    for (int i = 0; i < N; ++i) {
        out.eigenvalues[i] = {wr[i], wi[i]};
        if (wi[i] == 0.0) {
            for (int j = 0; j < N; ++j) out.right[i][j] = vr[static_cast<std::size_t>(j) * N + i];
        } else if (wi[i] > 0.0) {
            for (int j = 0; j < N; ++j)
                out.right[i][j] = {vr[static_cast<std::size_t>(j) * N + i],
                                   vr[static_cast<std::size_t>(j) * N + i + 1]};
        } else {
            for (int j = 0; j < N; ++j)
                out.right[i][j] = {vr[static_cast<std::size_t>(j) * N + i - 1],
                                   -vr[static_cast<std::size_t>(j) * N + i]};
        }
    }
    return out;
}

// Label by position along the symbol curve: each eigenvalue is projected onto
// the nearest point of a dense curve sampling and the labels follow the curve
// order. Plain nearest-grid matching goes wrong here because the O(ln N / N)
// eigenvalue displacement off the curve is comparable to the grid spacing;
// ordering by the curve parameter is the global re-assignment that keeps the
// momenta monotone in l.
inline SpectralDecomposition label_spectrum(const RawEigenpairs& raw) {
    int N = raw.N;
    const FHParams& p = raw.params;
    auto symbol_at = [&](double th) {
        return (th == 0.0 && p.alpha > 0.0) ? cplx(0.0)
               : (th == 0.0)                ? std::polar(1.0, -p.beta * pi)
                                            : symbol_circle(p, th);
    };
    int m = std::max(8192, 16 * N);
    std::vector<cplx> curve(m - 1);
    for (int k = 1; k < m; ++k) curve[k - 1] = symbol_at(2.0 * pi * k / m);
    struct Proj {
        double theta_star;
        int ev;
    };
    std::vector<Proj> proj(N);
    for (int i = 0; i < N; ++i) {
        int best = 0;
        double bd = 1e300;
        for (int k = 0; k < m - 1; ++k) {
            double d = std::abs(raw.eigenvalues[i] - curve[k]);
            if (d < bd) {
                bd = d;
                best = k;
            }
        }
        // the curve runs clockwise in theta: label l corresponds to
        // theta = 2 pi l/(N-1) traversed as e^{-i theta}
        proj[i] = {2.0 * pi - 2.0 * pi * (best + 1) / m, i};
    }
    std::sort(proj.begin(), proj.end(), [](const Proj& a, const Proj& b) {
        if (a.theta_star != b.theta_star) return a.theta_star < b.theta_star;
        return a.ev < b.ev;
    });
    SpectralDecomposition d;
    d.N = N;
    d.params = p;
    d.entries.resize(N);
    for (int l = 0; l < N; ++l) {
        int i = proj[l].ev;
        double theta = 2.0 * pi * l / (N - 1);
        double th = (l == 0 || l == N - 1) ? 0.0 : 2.0 * pi - theta;
        d.entries[l] = {l, raw.eigenvalues[i], raw.right[i],
                        std::abs(raw.eigenvalues[i] - symbol_at(th))};
    }
    return d;
}

// Rescale so that sum_j psi_{N-1-j} psi_j = 1 (complex square root), then fix
// the residual sign by the first component above threshold.
inline SpectralDecomposition normalize_biorthogonal(SpectralDecomposition d) {
    int N = d.N;
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b)
            if (std::abs(d.entries[a].eigenvalue - d.entries[b].eigenvalue) <= 1e-10)
                throw std::runtime_error(
                    "normalize_biorthogonal: degenerate eigenvalue pair (gap <= 1e-10)");
    for (auto& e : d.entries) {
        cplx s = 0.0;
        for (int j = 0; j < N; ++j) s += e.psi[N - 1 - j] * e.psi[j];
        if (std::abs(s) < 1e-14)
            throw std::runtime_error(
                "normalize_biorthogonal: vanishing self-pairing (defective pair)");
        cplx scale = 1.0 / std::sqrt(s);
        for (auto& v : e.psi) v *= scale;
        for (int j = 0; j < N; ++j) {
            if (std::abs(e.psi[j]) > 1e-12) {
                bool flip = e.psi[j].real() < -1e-12 ||
                            (std::abs(e.psi[j].real()) <= 1e-12 && e.psi[j].imag() < 0.0);
                if (flip)
                    for (auto& v : e.psi) v = -v;
                break;
            }
        }
    }
    return d;
}

inline double check_biorthonormality(const SpectralDecomposition& d) {
    int N = d.N;
    double worst = 0.0;
    for (int l = 0; l < N; ++l)
        for (int m = 0; m < N; ++m) {
            cplx s = 0.0;
            for (int j = 0; j < N; ++j) s += d.entries[l].psi[N - 1 - j] * d.entries[m].psi[j];
            worst = std::max(worst, std::abs(s - (l == m ? 1.0 : 0.0)));
        }
    return worst;
}

// max_{j,k} |sum_l psi-left^l_j psi^l_k - delta(j,k)|
inline double check_completeness(const SpectralDecomposition& d) {
    int N = d.N;
    double worst = 0.0;
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k) {
            cplx s = 0.0;
            for (int l = 0; l < N; ++l)
                s += d.entries[l].psi[N - 1 - j] * d.entries[l].psi[k];
            worst = std::max(worst, std::abs(s - (j == k ? 1.0 : 0.0)));
        }
    return worst;
}

inline double max_residual(const ToeplitzMatrix& t, const SpectralDecomposition& d) {
    int N = t.N;
    double norm_t = 0.0;
    for (int j = 0; j < N; ++j) {
        double r = 0.0;
        for (int k = 0; k < N; ++k) r += std::abs(t(j, k));
        norm_t = std::max(norm_t, r);
    }
    double worst = 0.0;
    for (const auto& e : d.entries) {
        double norm_psi = 0.0;
        for (const auto& v : e.psi) norm_psi = std::max(norm_psi, std::abs(v));
        for (int j = 0; j < N; ++j) {
            cplx s = 0.0;
            for (int k = 0; k < N; ++k) s += t(j, k) * e.psi[k];
            worst = std::max(worst, std::abs(s - e.eigenvalue * e.psi[j]) /
                                        (norm_t * norm_psi));
        }
    }
    return worst;
}

}  // namespace fht
