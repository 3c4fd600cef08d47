#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace fht {

using cplx = std::complex<double>;
inline constexpr double pi = std::numbers::pi;

struct FHParams {
    double alpha = 0.0;
    double beta = 0.0;

    bool in_study_range() const {
        return 0.0 < alpha && alpha < std::abs(beta) && std::abs(beta) < 1.0;
    }
};

// a(e^{i theta}) = (2 - 2 cos theta)^alpha * e^{i beta (theta - pi)}.
// The (-z)^beta branch is continuous on theta in (0, 2pi) and real-positive at
// theta = pi.
inline cplx symbol_circle(const FHParams& p, double theta) {
    if (theta == 0.0) {
        if (p.alpha > 0.0) return {0.0, 0.0};
        throw std::domain_error("symbol_circle: singular at theta=0 for alpha<=0");
    }
    double base = 2.0 - 2.0 * std::cos(theta);
    double mag = std::pow(base, p.alpha);
    return std::polar(mag, p.beta * (theta - pi));
}

struct BranchedValue {
    cplx value;
    double arg_zm1;  // argument of (z-1), in [0, 2pi)
    double arg_z;    // argument of z, in [0, 2pi)
};

namespace detail {
inline double arg02pi(cplx z) {
    double a = std::arg(z);
    if (a < 0.0) a += 2.0 * pi;
    return a;
}
}  // namespace detail

// (z-1)^{2 alpha} z^{beta-alpha} e^{-i(beta+alpha) pi}, both cuts on the
// positive real axis.
inline BranchedValue symbol_analytic(const FHParams& p, cplx z) {
    if (z == cplx(0.0)) throw std::domain_error("symbol_analytic: z=0");
    if (z.imag() == 0.0 && z.real() > 0.0)
        throw std::domain_error("symbol_analytic: z on branch cut [0,inf)");
    double a1 = detail::arg02pi(z - 1.0);
    double a2 = detail::arg02pi(z);
    cplx f1 = std::exp(2.0 * p.alpha * (std::log(std::abs(z - 1.0)) + cplx(0.0, a1)));
    cplx f2 = std::exp((p.beta - p.alpha) * (std::log(std::abs(z)) + cplx(0.0, a2)));
    cplx phase = std::exp(cplx(0.0, -(p.beta + p.alpha) * pi));
    return {f1 * f2 * phase, a1, a2};
}

// d/dz of the analytic symbol: a(z) * (2 alpha/(z-1) + (beta-alpha)/z).
inline cplx symbol_analytic_deriv(const FHParams& p, cplx z, cplx a_of_z) {
    return a_of_z * (2.0 * p.alpha / (z - 1.0) + (p.beta - p.alpha) / z);
}

inline std::vector<cplx> symbol_image(const FHParams& p, int m) {
    if (m < 4) throw std::invalid_argument("symbol_image: m < 4");
    std::vector<cplx> out(m);
    out[0] = (p.alpha > 0.0)    ? cplx(0.0)
             : (p.alpha == 0.0) ? std::polar(1.0, -p.beta * pi)
                                : symbol_circle(p, 0.0);  // diverges: let it throw
    for (int k = 1; k < m; ++k) out[k] = symbol_circle(p, 2.0 * pi * k / m);
    return out;
}

// Winding number of K(e^{ip}) = a(e^{ip}) - eps around 0 by unwrapped discrete
// phase; m doubles until all steps are below pi/2.
inline int winding_number(const FHParams& p, cplx eps, int m) {
    for (int cap = 0; cap < 16; ++cap, m *= 2) {
        double total = 0.0;
        double prev = std::arg(symbol_circle(p, 2.0 * pi * 1e-300) - eps);
        // theta=0 handled as the one-sided limit; start just off zero
        double first = prev;
        bool ok = true;
        for (int k = 1; k <= m; ++k) {
            double theta = 2.0 * pi * k / m;
            double cur = (k == m) ? first : std::arg(symbol_circle(p, theta) - eps);
            double step = cur - prev;
            while (step > pi) step -= 2.0 * pi;
            while (step < -pi) step += 2.0 * pi;
            if (std::abs(step) >= pi / 2.0) { ok = false; break; }
            total += step;
            prev = cur;
        }
        if (ok) return static_cast<int>(std::lround(total / (2.0 * pi)));
    }
    throw std::runtime_error("winding_number: no convergence (eps too close to curve?)");
}

// Damped Newton on the analytic continuation; root with |z_c| > 1.
inline cplx solve_zc(const FHParams& p, cplx eps, cplx z0) {
    cplx z = z0;
    const int max_iter = 200;
    double target = 1e-12 * std::abs(eps);
    for (int it = 0; it < max_iter; ++it) {
        cplx a = symbol_analytic(p, z).value;
        cplx r = a - eps;
        if (std::abs(r) <= target) {
            if (std::abs(z) <= 1.0 && std::abs(z) < 1.0 - 1e-12)
                throw std::runtime_error("solve_zc: converged to root inside unit circle");
            return z;
        }
        cplx da = symbol_analytic_deriv(p, z, a);
        cplx step = r / da;
        // damping: keep the iterate off the cut and avoid overshooting
        double damp = 1.0;
        for (int h = 0; h < 60; ++h) {
            cplx zn = z - damp * step;
            if (zn.imag() == 0.0 && zn.real() > 0.0) zn += cplx(0.0, 1e-300);
            bool on_cut = (zn.imag() == 0.0 && zn.real() > 0.0);
            if (!on_cut && std::abs(zn) > 1e-8) {
                cplx an;
                try {
                    an = symbol_analytic(p, zn).value;
                } catch (const std::domain_error&) {
                    damp *= 0.5;
                    continue;
                }
                if (std::abs(an - eps) < std::abs(r) || damp < 1e-6) {
                    z = zn;
                    break;
                }
            }
            damp *= 0.5;
        }
    }
    throw std::runtime_error("solve_zc: Newton iteration did not converge");
}

}  // namespace fht
