#pragma once

#include <complex>
#include <span>
#include <vector>

#include "landau/physics.hpp"

namespace landau {

// alpha = -conj(u) * k maps the drive parameter onto the displacement
// argument; every probability below depends on alpha only through |alpha|^2.
std::complex<double> displacement_argument(std::complex<double> u, const derived_scales& s);

// Survival of level n at intensity x = |u k|^2:
//   amplitude = e^{-x/2} L_n(x) (up to the pure phase gamma),
//   P(n -> n)  = e^{-x} L_n(x)^2.
// gamma is carried through untouched so callers can confirm it never reaches
// the probabilities.
struct survival_result {
    int n = 0;
    double x = 0.0;
    double amplitude_modulus = 0.0;
    int amplitude_sign = 0;  // sign of L_n(x)
    double survival = 0.0;
    double transition = 0.0;  // 1 - survival, exactly
    double gamma = 0.0;
};
survival_result survival(int n, double x, double gamma = 0.0);

// Fejer large-n estimate of the survival:
//   P(n -> n) ~ cos^2(2 sqrt((n+1) x) - pi/4) / (pi sqrt(x) sqrt(n+1)).
double survival_fejer(int n, double x);

// <m| D(alpha) |n> in closed form via associated Laguerre polynomials, stable
// for quantum numbers up to ~1e5 through log-space prefactors.
std::complex<double> displacement_element(int m, int n, std::complex<double> alpha);

// One row of |<m|D(alpha)|n>|^2 with truncation bookkeeping.
struct transition_table {
    int n_source = 0;
    std::complex<double> alpha;
    int m_max = 0;
    std::vector<double> probabilities;  // index m = 0..m_max
    double row_sum = 0.0;
    double tail_mass = 0.0;  // 1 - row_sum (signed; tiny negative is rounding)
    double diagonal = 0.0;
    double up_mass = 0.0;    // sum over m > n
    double down_mass = 0.0;  // sum over m < n
};

struct transition_settings {
    int m_max = -1;               // -1: start from the support heuristic
    int m_cap = 200000;           // absolute ceiling before giving up
    double tail_tolerance = 1e-10;
};

// Fails with truncation_error if the tail cannot be brought under
// tail_tolerance by m_cap; otherwise m_max is raised automatically.
transition_table transition_matrix(int n_source, std::complex<double> alpha,
                                   const transition_settings& settings = {});

// Support heuristic: past n + x + 10 sqrt(x + n + 1) + 20 the row mass is
// negligible for every case this library targets.
int default_m_max(int n, double abs_alpha_sq);

struct sweep_row {
    double index;  // n for level sweeps, x for intensity sweeps
    double survival;
    double transition;
    double fejer_survival;    // NaN when x == 0 (asymptotic undefined there)
    double fejer_transition;
};

// Survival/transition over n = n_min..n_max at fixed x, sharing one recurrence
// pass; O(n_max) total.
std::vector<sweep_row> sweep_over_levels(double x, int n_min, int n_max);

// Fixed n, varying x.
std::vector<sweep_row> sweep_over_intensity(int n, std::span<const double> x_values);

}  // namespace landau
