#include "landau/laguerre.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace landau {

namespace {

void check_args(int n, int a, double x) {
    if (n < 0) throw std::invalid_argument("laguerre: degree n must be >= 0");
    if (a < 0) throw std::invalid_argument("laguerre: order a must be >= 0");
    if (!std::isfinite(x) || x < 0.0)
        throw std::invalid_argument("laguerre: argument x must be finite and >= 0");
}

// Forward recurrence from given seeds for L_0 and L_1 (possibly pre-scaled).
// The recurrence is stable in the upward direction for x >= 0.
double recur(int n, int a, double x, double l0, double l1) {
    if (n == 0) return l0;
    double lm1 = l0, l = l1;
    for (int m = 1; m < n; ++m) {
        double next = ((2.0 * m + 1.0 + a - x) * l - (m + a) * lm1) / (m + 1.0);
        lm1 = l;
        l = next;
    }
    return l;
}

}  // namespace

double laguerre(int n, double x) { return assoc_laguerre(n, 0, x); }

double laguerre_scaled(int n, double x) { return assoc_laguerre_scaled(n, 0, x); }

double assoc_laguerre(int n, int a, double x) {
    check_args(n, a, x);
    double v = recur(n, a, x, 1.0, 1.0 + a - x);
    if (!std::isfinite(v))
        throw std::overflow_error(
            "laguerre: value left double range; use the scaled or mantissa/exponent form");
    return v;
}

double assoc_laguerre_scaled(int n, int a, double x) {
    check_args(n, a, x);
    double s = std::exp(-0.5 * x);
    return recur(n, a, x, s, (1.0 + a - x) * s);
}

scaled_value assoc_laguerre_mantexp(int n, int a, double x) {
    check_args(n, a, x);
    if (n == 0) return {1.0, 0.0};
    double lm1 = 1.0, l = 1.0 + a - x;
    double log_scale = 0.0;
    constexpr double big = 1e250, small = 1e-250;
    constexpr double log_big = 575.646273248511421;  // ln(1e250)
    for (int m = 1; m < n; ++m) {
        double next = ((2.0 * m + 1.0 + a - x) * l - (m + a) * lm1) / (m + 1.0);
        lm1 = l;
        l = next;
        double mag = std::fmax(std::fabs(l), std::fabs(lm1));
        if (mag > big) {
            l *= 1e-250;
            lm1 *= 1e-250;
            log_scale += log_big;
        } else if (mag < small && mag > 0.0) {
            l *= 1e250;
            lm1 *= 1e250;
            log_scale -= log_big;
        }
    }
    return {l, log_scale};
}

double fejer_asymptotic(int n, double x) {
    if (n < 0) throw std::invalid_argument("fejer_asymptotic: n must be >= 0");
    if (!std::isfinite(x) || x <= 0.0)
        throw std::domain_error("fejer_asymptotic: requires x > 0");
    double np1 = n + 1.0;
    double amp = std::exp(0.5 * x) /
                 (std::sqrt(std::numbers::pi) * std::pow(x, 0.25) * std::pow(np1, 0.25));
    return amp * std::cos(2.0 * std::sqrt(np1 * x) - 0.25 * std::numbers::pi);
}

laguerre_eval evaluate_laguerre(int n, int a, double x) {
    check_args(n, a, x);
    laguerre_eval e;
    e.n = n;
    e.alpha_order = a;
    e.x = x;
    e.scaled_value = recur(n, a, x, std::exp(-0.5 * x), (1.0 + a - x) * std::exp(-0.5 * x));
    e.value = recur(n, a, x, 1.0, 1.0 + a - x);  // may be +/-inf; caller asked for raw
    return e;
}

}  // namespace landau
