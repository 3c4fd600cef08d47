#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>

#include "fht/specialfn.hpp"
#include "fht/symbol.hpp"

namespace fht {

struct TwoTermModel {
    cplx A;
    cplx B;
    cplx z_c;
    double alpha = 0.0;
    double beta = 0.0;
};

namespace detail {

// (sin pi(a+b) / pi eps) int_0^inf dmu e^{-mu} mu^{2a} / (1 - z_c e^{-mu/scale})
// via mu = e^v substitution and trapezoid doubling to 1e-10.
inline cplx ab_integral(const FHParams& p, cplx eps, cplx z_c, double scale) {
    double a = p.alpha;
    // the kernel pole at mu = ln z_c sits off the real axis only when
    // arg(z_c) != 0; near the crossing the quadrature is meaningless
    if (std::abs(std::arg(z_c)) < 1e-6)
        throw std::runtime_error(
            "ab_integral: z_c within 1e-6 of the positive real axis");
    double v_lo = (std::log(1e-18) - 5.0) / (2.0 * a + 1.0);
    double v_hi = std::log(60.0);  // e^{-mu} cuts the integrand off regardless of scale
    auto integrand = [&](double v) -> cplx {
        double mu = std::exp(v);
        cplx den = 1.0 - z_c * std::exp(-mu / scale);
        if (std::abs(den) < 1e-6)
            throw std::runtime_error("ab_integral: kernel denominator below 1e-6 "
                                     "(z_c too close to the positive real axis)");
        return std::exp(-mu + (2.0 * a + 1.0) * v) / den;
    };
    int m = 256;
    cplx prev = 0.0;
    for (int it = 0; it < 14; ++it, m *= 2) {
        double h = (v_hi - v_lo) / m;
        cplx sum = 0.5 * (integrand(v_lo) + integrand(v_hi));
        for (int i = 1; i < m; ++i) sum += integrand(v_lo + i * h);
        sum *= h;
        if (it > 0 && std::abs(sum - prev) < 1e-10) {
            prev = sum;
            break;
        }
        prev = sum;
    }
    return std::sin(pi * (p.alpha + p.beta)) / (pi * eps) * prev;
}

}  // namespace detail

inline cplx coeff_A(const FHParams& p, cplx eps, cplx z_c) {
    if (std::abs(z_c) <= 1.0) throw std::domain_error("coeff_A: need |z_c| > 1");
    return detail::ab_integral(p, eps, z_c, 1.0);
}

inline cplx coeff_B(const FHParams& p, cplx eps, cplx z_c, long j) {
    if (std::abs(z_c) <= 1.0) throw std::domain_error("coeff_B: need |z_c| > 1");
    return -detail::ab_integral(p, eps, z_c, static_cast<double>(j + 1));
}

inline cplx psi_two_term(const TwoTermModel& m, long j) {
    return m.A * std::pow(m.z_c, static_cast<double>(-j - 1)) +
           m.B * std::pow(static_cast<double>(j + 1), -(2.0 * m.alpha + 1.0));
}

inline double predicted_im_p(double alpha, int N) {
    if (N < 2) throw std::invalid_argument("predicted_im_p: N >= 2");
    return (2.0 * alpha + 1.0) * std::log(static_cast<double>(N)) / N;
}

// delta eps / eps = (beta + i alpha cot(p/2)) (2 alpha + 1) ln N / N
inline cplx eigenvalue_shift(const FHParams& p, cplx mom, int N) {
    double re = mom.real();
    if (re < 1e-3 || re > 2.0 * pi - 1e-3)
        throw std::domain_error("eigenvalue_shift: momentum too close to the endpoints");
    cplx cot = std::cos(mom / 2.0) / std::sin(mom / 2.0);
    return (p.beta + cplx(0.0, 1.0) * p.alpha * cot) * (2.0 * p.alpha + 1.0) *
           std::log(static_cast<double>(N)) / static_cast<double>(N);
}

inline cplx tail_term(const FHParams& p, cplx eps, long j) {
    if (j < 1) throw std::invalid_argument("tail_term: j >= 1");
    double g = std::exp(log_gamma_real(2.0 * p.alpha + 1.0));
    return -g * std::sin(pi * (p.alpha + p.beta)) /
           (pi * eps * std::pow(static_cast<double>(j + 1), 2.0 * p.alpha + 1.0));
}

}  // namespace fht
