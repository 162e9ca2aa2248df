#pragma once

namespace landau {

// Laguerre polynomial L_n(x) by the stable three-term forward recurrence
//   (m+1) L_{m+1} = (2m+1-x) L_m - m L_{m-1}.
// Raw values overflow near n ~ 10^4 for moderate x; prefer laguerre_scaled
// for anything but small n.  Throws std::invalid_argument on bad input and
// std::overflow_error when the recurrence leaves double range.
double laguerre(int n, double x);

// e^{-x/2} L_n(x): the recurrence run with the exponential damping folded
// into the seeds.  Bounded by 1 in magnitude for all n, x >= 0, so it never
// overflows; this is also exactly the survival amplitude.
double laguerre_scaled(int n, double x);

// Associated Laguerre L_n^{(a)}(x), integer a >= 0, by
//   (m+1) L_{m+1}^{(a)} = (2m+1+a-x) L_m^{(a)} - (m+a) L_{m-1}^{(a)}.
double assoc_laguerre(int n, int a, double x);

// e^{-x/2} L_n^{(a)}(x).
double assoc_laguerre_scaled(int n, int a, double x);

// Mantissa/exponent form: value = mantissa * exp(log_scale).  The recurrence
// rescales whenever the pair of running values grows past ~1e250, so this
// stays representable for n up to 1e5 and beyond where raw doubles blow up.
struct scaled_value {
    double mantissa;
    double log_scale;
};
scaled_value assoc_laguerre_mantexp(int n, int a, double x);

// Fejer asymptotic for fixed x > 0 and large n:
//   L_n(x) ~ e^{x/2} / (sqrt(pi) x^{1/4} (n+1)^{1/4}) * cos(2 sqrt((n+1) x) - pi/4).
double fejer_asymptotic(int n, double x);

// One evaluation with both normalizations, for callers that want the pair.
struct laguerre_eval {
    int n;
    int alpha_order;
    double x;
    double value;         // L_n^{(a)}(x); non-finite if out of double range
    double scaled_value;  // e^{-x/2} L_n^{(a)}(x)
};
laguerre_eval evaluate_laguerre(int n, int alpha_order, double x);

}  // namespace landau
