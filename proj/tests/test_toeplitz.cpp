#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "fht/toeplitz.hpp"

using namespace fht;

static const FHParams kMain{1.0 / 3.0, -0.5};
static const FHParams kShift{0.0, -1.0};

TEST_CASE("shift-symbol elements: single nonzero diagonal") {
    CHECK(element(kShift, -1) == Catch::Approx(-1.0).epsilon(1e-13));
    for (long n : {-5L, -2L, 0L, 1L, 2L, 7L, 100L}) CHECK(element(kShift, n) == 0.0);
}

TEST_CASE("element rejects alpha <= -1/2") {
    CHECK_THROWS_AS(element(FHParams{-0.6, 0.2}, 0), std::domain_error);
}

TEST_CASE("element n=0 vs numerical Fourier integral") {
    cplx num = element_numeric(kMain, 0, 4096);
    CHECK(std::abs(num.imag()) < 1e-9);
    CHECK(element(kMain, 0) == Catch::Approx(num.real()).margin(1e-10));
}

TEST_CASE("element vs numeric across offsets") {
    for (long n : {-7L, -3L, -1L, 1L, 2L, 5L, 11L}) {
        cplx num = element_numeric(kMain, n, 4096);
        CHECK(std::abs(num.imag()) < 1e-9);
        CHECK(std::abs(element(kMain, n) - num.real()) < 1e-10);
    }
}

TEST_CASE("element_numeric single Fourier mode for the shift symbol") {
    cplx v = element_numeric_fixed(kShift, -1, 512);
    CHECK(std::abs(v - cplx(-1.0, 0.0)) < 1e-12);
}

TEST_CASE("element_numeric Cauchy convergence") {
    cplx a = element_numeric_fixed(kMain, 5, 1 << 16);
    cplx b = element_numeric_fixed(kMain, 5, 1 << 17);
    CHECK(std::abs(a - b) < 1e-10);
}

TEST_CASE("element parity under beta -> -beta, n -> -n") {
    FHParams flip{kMain.alpha, -kMain.beta};
    for (long n = -60; n <= 60; n += 7) {
        CHECK(element(kMain, n) == Catch::Approx(element(flip, -n)).margin(1e-15));
    }
}

TEST_CASE("element_asymptotic closed-form spot value") {
    // alpha=0, beta=-1/2, n=10: -sin(-pi/2)/(pi * 9.5)
    FHParams p{0.0, -0.5};
    CHECK(element_asymptotic(p, 10) == Catch::Approx(1.0 / (pi * 9.5)).epsilon(1e-13));
}

TEST_CASE("element_asymptotic matches element at large |n|") {
    // the first correction is O(1/n): ~4% at n=40, under 2% by |n|=100
    CHECK(element_asymptotic(kMain, 40) / element(kMain, 40) ==
          Catch::Approx(1.0).margin(0.05));
    for (long n : {100L, -100L}) {
        double ratio = element_asymptotic(kMain, n) / element(kMain, n);
        CHECK(ratio == Catch::Approx(1.0).margin(0.02));
    }
}

TEST_CASE("tail law constant") {
    double target = std::exp(log_gamma_real(2.0 * kMain.alpha + 1.0)) *
                    std::abs(std::sin(pi * (kMain.alpha + kMain.beta))) / pi;
    long n = 100;
    double got = std::abs(element(kMain, n)) *
                 std::pow(static_cast<double>(n), 2.0 * kMain.alpha + 1.0);
    CHECK(got == Catch::Approx(target).epsilon(0.02));
}

TEST_CASE("element magnitude survives very large offsets") {
    // log-gamma difference form: no overflow even at |n| ~ 10^4
    double v = element(kMain, 10000);
    CHECK(std::isfinite(v));
    CHECK(std::abs(v) > 0.0);
    CHECK(std::abs(v) < 1e-5);
}

TEST_CASE("build_matrix shift example N=4") {
    auto t = build_matrix(kShift, 4);
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 4; ++k) {
            double expect = (j - k == -1) ? -1.0 : 0.0;
            CHECK(t(j, k) == Catch::Approx(expect).margin(1e-14));
        }
}

TEST_CASE("build_matrix 2x2 main case") {
    auto t = build_matrix(kMain, 2);
    CHECK(t(0, 0) == Catch::Approx(element(kMain, 0)));
    CHECK(t(0, 1) == Catch::Approx(element(kMain, -1)));
    CHECK(t(1, 0) == Catch::Approx(element(kMain, 1)));
    CHECK(t(1, 1) == Catch::Approx(element(kMain, 0)));
    CHECK_THROWS_AS(build_matrix(kMain, 1), std::invalid_argument);
}

TEST_CASE("matrix entries real and finite") {
    auto t = build_matrix(kMain, 60);
    for (double v : t.diagonals) CHECK(std::isfinite(v));
}

TEST_CASE("apply_operator on a geometric vector reproduces the shift eigenvalue") {
    // (-shift) psi = eps psi for psi_j = (-eps)^j
    cplx eps(0.4, 0.1);
    int j_max = 16;
    std::size_t M = 200;
    std::vector<cplx> vec(M);
    for (std::size_t j = 0; j < M; ++j) vec[j] = std::pow(-eps, static_cast<double>(j));
    auto res = apply_operator(kShift, vec, j_max);
    for (int j = 0; j < j_max; ++j)
        CHECK(std::abs(res.values[j] - eps * vec[j]) < 1e-12);
}

TEST_CASE("apply_operator zero vector") {
    std::vector<cplx> vec(64, 0.0);
    auto res = apply_operator(kMain, vec, 16);
    for (const auto& v : res.values) CHECK(std::abs(v) == 0.0);
    CHECK_THROWS_AS(apply_operator(kMain, vec, 63), std::invalid_argument);
}
