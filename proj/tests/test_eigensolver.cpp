#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "fht/eigensolver.hpp"

using namespace fht;

static const FHParams kMain{1.0 / 3.0, -0.5};
static const FHParams kShift{0.0, -1.0};

static SpectralDecomposition decompose(const FHParams& p, int N) {
    return normalize_biorthogonal(label_spectrum(eig_dense(build_matrix(p, N))));
}

TEST_CASE("shift matrix is nilpotent with all-zero eigenvalues") {
    auto raw = eig_dense(build_matrix(kShift, 5));
    for (const auto& ev : raw.eigenvalues) CHECK(std::abs(ev) < 1e-12);
}

TEST_CASE("constant-diagonal matrix has the constant as its only eigenvalue") {
    ToeplitzMatrix t;
    t.N = 6;
    t.diagonals.assign(11, 0.0);
    t.diagonals[5] = 2.5;  // offset 0
    auto raw = eig_dense(t);
    for (const auto& ev : raw.eigenvalues) CHECK(std::abs(ev - 2.5) < 1e-12);
}

TEST_CASE("eig_dense cap enforced") {
    CHECK_THROWS_AS(eig_dense(build_matrix(kMain, 12), 10), std::invalid_argument);
}

TEST_CASE("main-case eigenvalues satisfy the residual bound") {
    auto t = build_matrix(kMain, 40);
    auto d = decompose(kMain, 40);
    CHECK(max_residual(t, d) < 1e-10);
}

TEST_CASE("labels are a permutation and matching distance shrinks with N") {
    auto d100 = decompose(kMain, 100);
    std::vector<int> ls;
    for (const auto& e : d100.entries) ls.push_back(e.l);
    std::sort(ls.begin(), ls.end());
    for (int l = 0; l < 100; ++l) CHECK(ls[l] == l);

    auto d200 = decompose(kMain, 200);
    // compare the maximum grid distance over the central labels
    auto central_max = [](const SpectralDecomposition& d) {
        double m = 0.0;
        for (const auto& e : d.entries)
            if (e.l > d.N / 10 && e.l < 9 * d.N / 10) m = std::max(m, e.grid_distance);
        return m;
    };
    CHECK(central_max(d200) < central_max(d100));
}

TEST_CASE("biorthonormality at N=40") {
    auto d = decompose(kMain, 40);
    CHECK(check_biorthonormality(d) < 1e-8);
}

TEST_CASE("completeness at N=60") {
    auto d = decompose(kMain, 60);
    CHECK(check_completeness(d) < 1e-8);
}

TEST_CASE("unnormalized decomposition fails completeness") {
    auto d = label_spectrum(eig_dense(build_matrix(kMain, 40)));
    CHECK(check_completeness(d) > 0.01);
}

TEST_CASE("normalize_biorthogonal rejects the defective shift matrix") {
    auto d = label_spectrum(eig_dense(build_matrix(kShift, 4)));
    CHECK_THROWS_AS(normalize_biorthogonal(d), std::runtime_error);
}

TEST_CASE("spectrum closed under conjugation") {
    auto raw = eig_dense(build_matrix(kMain, 60));
    for (const auto& ev : raw.eigenvalues) {
        double best = 1e300;
        for (const auto& other : raw.eigenvalues)
            best = std::min(best, std::abs(std::conj(ev) - other));
        CHECK(best < 1e-10);
    }
}

TEST_CASE("beta flip preserves the eigenvalue multiset") {
    auto a = eig_dense(build_matrix(kMain, 60)).eigenvalues;
    auto b = eig_dense(build_matrix(FHParams{kMain.alpha, -kMain.beta}, 60)).eigenvalues;
    auto key = [](const cplx& x, const cplx& y) {
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
    };
    std::sort(a.begin(), a.end(), key);
    std::sort(b.begin(), b.end(), key);
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(std::abs(a[i] - b[i]) < 1e-9);
}

TEST_CASE("left eigenvector property via index reversal") {
    int N = 40;
    auto t = build_matrix(kMain, N);
    auto d = decompose(kMain, N);
    for (int l : {5, 19, 30}) {
        const auto& e = d.entries[l];
        double norm_psi = 0.0;
        for (const auto& v : e.psi) norm_psi = std::max(norm_psi, std::abs(v));
        for (int k = 0; k < N; ++k) {
            cplx s = 0.0;
            for (int j = 0; j < N; ++j) s += d.psi_left(l, j) * t(j, k);
            CHECK(std::abs(s - e.eigenvalue * d.psi_left(l, k)) < 1e-8 * norm_psi);
        }
    }
}

TEST_CASE("labeling stability across N doubling") {
    auto d100 = decompose(kMain, 100);
    auto d200 = decompose(kMain, 200);
    // same label fraction: arguments of the labeled eigenvalues track each other
    int l100 = 24, l200 = 49;
    double a1 = std::arg(d100.entries[l100].eigenvalue);
    double a2 = std::arg(d200.entries[l200].eigenvalue);
    CHECK(std::abs(a1 - a2) < 0.1);
}

TEST_CASE("normalization sign convention: first significant component positive") {
    auto d = decompose(kMain, 40);
    for (const auto& e : d.entries) {
        for (const auto& v : e.psi) {
            if (std::abs(v) > 1e-12) {
                bool ok = v.real() > -1e-12 ||
                          (std::abs(v.real()) <= 1e-12 && v.imag() >= 0.0);
                CHECK(ok);
                break;
            }
        }
    }
}
