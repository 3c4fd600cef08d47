#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fht {

struct GammaValue {
    double value = 0.0;
    bool is_pole = false;
};

namespace detail {

// Lanczos approximation, g = 607/128, 15 coefficients.
inline constexpr double lanczos_g = 607.0 / 128.0;
inline constexpr double lanczos_c[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

// sin(pi*x) with argument reduction that avoids catastrophic cancellation
// for large |x|.
inline double sin_pi(double x) {
    double r = std::remainder(x, 2.0);  // r in [-1, 1]
    return std::sin(std::numbers::pi * r);
}

// ln Gamma(x) for x >= 0.5 only.
inline double log_gamma_lanczos(double x) {
    double a = lanczos_c[0];
    for (int k = 1; k < 15; ++k) a += lanczos_c[k] / (x - 1.0 + k);
    double t = x + lanczos_g - 0.5;
    return 0.5 * std::log(2.0 * std::numbers::pi) + (x - 0.5) * std::log(t) - t + std::log(a);
}

inline bool near_nonpositive_integer(double x, double tol = 1e-12) {
    return x <= 0.5 && std::abs(x - std::round(x)) <= tol;
}

}  // namespace detail

inline double log_gamma_real(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma_real: argument must be positive");
    if (x == 1.0 || x == 2.0) return 0.0;  // Gamma(1) = Gamma(2) = 1 exactly
    if (x >= 0.5) return detail::log_gamma_lanczos(x);
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x), x in (0, 0.5)
    return std::log(std::numbers::pi / detail::sin_pi(x)) - detail::log_gamma_lanczos(1.0 - x);
}

inline GammaValue gamma_real(double x) {
    if (!std::isfinite(x)) throw std::domain_error("gamma_real: non-finite argument");
    if (detail::near_nonpositive_integer(x)) return {0.0, true};
    if (x > 171.6) throw std::overflow_error("gamma_real: argument too large");
    if (x >= 0.5) return {std::exp(detail::log_gamma_lanczos(x)), false};
    // reflection for x < 0.5 (including negative non-integer x)
    double v = std::numbers::pi /
               (detail::sin_pi(x) * std::exp(detail::log_gamma_lanczos(1.0 - x)));
    return {v, false};
}

// ln |1/Gamma(x)| together with the sign of 1/Gamma(x); exact zero flagged at poles.
// Used for gamma-ratio formulas whose arguments can be large negative.
struct LogInvGamma {
    double log_abs = 0.0;  // ln |1/Gamma(x)|
    double sign = 1.0;     // sign of 1/Gamma(x); 0 at poles
};

inline LogInvGamma log_inv_gamma(double x) {
    if (detail::near_nonpositive_integer(x)) return {0.0, 0.0};
    if (x == 1.0 || x == 2.0) return {0.0, 1.0};  // Gamma(1) = Gamma(2) = 1 exactly
    if (x >= 0.5) return {-detail::log_gamma_lanczos(x), 1.0};
    // 1/Gamma(x) = sin(pi x) Gamma(1-x) / pi
    double s = detail::sin_pi(x);
    return {std::log(std::abs(s)) + detail::log_gamma_lanczos(1.0 - x) -
                std::log(std::numbers::pi),
            s >= 0.0 ? 1.0 : -1.0};
}

}  // namespace fht
