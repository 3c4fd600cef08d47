#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <vector>

#include "fht/quasiparticle.hpp"
#include "fht/wienerhopf.hpp"

using namespace fht;

static const FHParams kMain{1.0 / 3.0, -0.5};
static const FHParams kShift{0.0, -1.0};

TEST_CASE("shift symbol: S vanishes identically") {
    WHFactorization wh(kShift, cplx(0.3, 0.0));
    CHECK(std::abs(wh.s_integral(cplx(0.0, 0.0))) < 1e-13);
    CHECK(std::abs(wh.s_integral(cplx(-0.5, 0.2))) < 1e-13);
}

TEST_CASE("shift symbol: quadrature coefficients are geometric") {
    cplx eps(0.3, 0.0);
    WHFactorization wh(kShift, eps);
    CHECK(std::abs(wh.z_c() - (-1.0 / eps)) < 1e-10);
    auto c = wh.psi_wh_coeffs(32);
    // exp(-G+) = 1/(z - z_c): coefficients satisfy c[j+1] = c[j]/z_c; checked
    // in absolute form since each coefficient carries a small absolute error
    // that would swamp a ratio once the values decay
    for (int j = 0; j + 1 < 32; ++j)
        CHECK(std::abs(c[j + 1] - c[j] / wh.z_c()) < 1e-11);
    // normalized against the closed-form eigenvector of the minus-shift
    // operator: psi_j = (-eps)^j
    for (int j = 0; j < 32; ++j)
        CHECK(std::abs(c[j] / c[0] - std::pow(-eps, j)) < 1e-8);
}

TEST_CASE("shift symbol: exp(-S) expands to the unit sequence") {
    WHFactorization wh(kShift, cplx(0.25, 0.1));
    auto c = wh.psi_s_coeffs(16);
    CHECK(std::abs(c[0] - 1.0) < 1e-12);
    for (int j = 1; j < 16; ++j) CHECK(std::abs(c[j]) < 1e-12);
}

TEST_CASE("closed-form shift factorization record") {
    auto f = shift_example_factorization(cplx(0.5, 0.0));
    REQUIRE(f.k_plus.size() == 2);
    CHECK(std::abs(f.k_plus[0] - 1.0) < 1e-15);
    CHECK(std::abs(f.k_plus[1] + 0.5) < 1e-15);
    REQUIRE(f.k_minus.size() == 1);
    CHECK(std::abs(f.k_minus[0] - 1.0) < 1e-15);
    CHECK(std::abs(f.psi(3) - 0.125) < 1e-15);
    CHECK(std::abs(f.psi(0) - 1.0) < 1e-15);
    CHECK_THROWS_AS(shift_example_factorization(cplx(1.2, 0.0)), std::domain_error);

    auto f0 = shift_example_factorization(cplx(0.0, 0.0));
    CHECK(std::abs(f0.psi(0) - 1.0) < 1e-15);
    CHECK(std::abs(f0.psi(5)) < 1e-15);
}

TEST_CASE("winding gate refuses nu = +1") {
    FHParams flipped{1.0 / 3.0, 0.5};
    // conjugate of an interior point of the beta = -1/2 curve lies inside the
    // flipped curve, where the winding is +1
    cplx eps = std::conj(symbol_circle(kMain, 2.0) * 0.95);
    CHECK_THROWS_AS(WHFactorization(flipped, eps), std::runtime_error);
}

TEST_CASE("g_plus consistency: Taylor partial sum matches a direct evaluation") {
    cplx eps = symbol_circle(kMain, pi / 2.0) * 0.97;
    WHFactorization wh(kMain, eps);
    auto c = wh.psi_wh_coeffs(512);
    cplx z(0.5, 0.0);
    cplx sum = 0.0;
    for (int j = 511; j >= 0; --j) sum = sum * z + c[j];
    // coefficient accuracy is bounded by the 1e-8 aliasing contract
    CHECK(std::abs(sum - std::exp(-wh.g_plus(z))) < 1e-7);
}

TEST_CASE("s_integral agrees with a direct contour integral up to a constant") {
    // independent oracle: G+(z) from the unit-circle contour integral
    // (1/2 pi i) oint dw ln K(w) / (w - z) with K = a - eps, evaluated by
    // trapezoid sampling with unwrapped ln K; differences of this quantity at
    // two points must match differences of ln(z - z_c) + S(z)
    cplx eps = symbol_circle(kMain, pi / 2.0) * 0.97;
    WHFactorization wh(kMain, eps);

    auto direct_gplus = [&](cplx z) {
        int m = 1 << 16;
        // w K(w) has zero winding, so its unwrapped log is single-valued on
        // the circle; midpoint rule avoids theta = 0
        cplx sum = 0.0;
        double prev_phase = 0.0;
        double offset = 0.0;
        bool first = true;
        for (int k = 0; k < m; ++k) {
            double theta = 2.0 * pi * (k + 0.5) / m;
            cplx w = std::polar(1.0, theta);
            cplx Kw = (symbol_circle(kMain, theta) - eps) * w;
            double ph = std::arg(Kw);
            if (!first) {
                double d = ph - prev_phase;
                if (d > pi) offset -= 2.0 * pi;
                if (d < -pi) offset += 2.0 * pi;
            }
            prev_phase = ph;
            first = false;
            cplx lnKw(std::log(std::abs(Kw)), ph + offset);
            sum += lnKw * (cplx(0.0, 1.0) * w) / (w - z);
        }
        return sum * (2.0 * pi / m) / cplx(0.0, 2.0 * pi);
    };

    cplx z1(0.0, 0.0), z2(-0.5, 0.1);
    cplx lhs = direct_gplus(z2) - direct_gplus(z1);
    cplx rhs = wh.g_plus(z2) - wh.g_plus(z1);
    CHECK(std::abs(lhs - rhs) < 1e-7);
}

TEST_CASE("comparison with the exact eigenvector at N=100") {
    int N = 100;
    int l = 24;
    auto d = normalize_biorthogonal(label_spectrum(eig_dense(build_matrix(kMain, N))));
    const auto& e = d.entries[l];
    double theta = 2.0 * pi * l / (N - 1);
    WHFactorization wh(kMain, e.eigenvalue, std::polar(1.0 + 3.0 / N, -theta));
    auto coeffs = wh.psi_wh_coeffs(N);
    auto rep = compare_with_exact(coeffs, e.psi, N / 5, N / 2);
    for (int j = 0; j <= N / 2; ++j) CHECK(rep.abs_err[j] < 1e-3);
    // relative error grows toward the right edge
    CHECK(rep.rel_err[90] > rep.rel_err[30]);
}

TEST_CASE("compare_with_exact is exact on itself") {
    std::vector<cplx> v(64);
    for (int j = 0; j < 64; ++j) v[j] = std::exp(cplx(-0.05 * j, 0.3 * j));
    auto rep = compare_with_exact(v, v, 10, 40);
    CHECK(std::abs(rep.C - 1.0) < 1e-14);
    for (double e : rep.abs_err) CHECK(e < 1e-14);
}

TEST_CASE("coefficient magnitudes obey the two-scale bound") {
    cplx eps = symbol_circle(kMain, pi / 2.0) * 0.97;
    WHFactorization wh(kMain, eps);
    auto c = wh.psi_wh_coeffs(256);
    double azc = std::abs(wh.z_c());
    for (int j = 0; j < 256; ++j) {
        double bound = std::max(std::pow(azc, -static_cast<double>(j)),
                                std::pow(j + 1.0, -(2.0 * kMain.alpha + 1.0)));
        CHECK(std::abs(c[j]) < 50.0 * bound);
    }
}
