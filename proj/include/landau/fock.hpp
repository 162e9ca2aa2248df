#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "landau/field.hpp"
#include "landau/physics.hpp"

namespace landau {

// Ladder operators on the lowest N Fock levels, a|n> = sqrt(n)|n-1>.
struct truncated_ladder {
    int dimension = 0;
    Eigen::MatrixXd lowering, raising, number;

    static truncated_ladder make(int n);
};

// exp(alpha a^dag - conj(alpha) a) on the truncated space, by scaling and
// squaring with a Taylor core.  Deliberately a separate route from the
// closed-form matrix elements; the two must agree without sharing code.
// Requires N comfortably above the |alpha| support heuristic.
Eigen::MatrixXcd displacement_matrix(std::complex<double> alpha, int n);

// Columns with index < N - guard_band of a well-truncated displacement are
// orthonormal; the guard band absorbs the edge corruption.
int displacement_guard_band(std::complex<double> alpha, int n);
double interior_unitarity_defect(const Eigen::MatrixXcd& d, std::complex<double> alpha);

struct oracle_settings {
    int dimension = 0;            // 0: derived from level + drive strength
    int steps_per_period = 16384;  // RK4 steps per cyclotron period
    double norm_tolerance = 1e-8;
    double tail_threshold = 1e-10;
    // Constant added to the Hamiltonian; probabilities must not feel it.
    double energy_offset = 0.0;
};

// Result of integrating i hbar dpsi/dt = H(t) psi over the field window from
// |initial_level>, with H = hbar omega (a^dag a + 1/2) + lambda(t) a +
// conj(lambda(t)) a^dag and lambda(t) = -i hbar k (c / 2B) conj(E(t)).
// The free phases e^{-i omega (n + 1/2) T} are divided out exactly at the
// end, so amplitudes compare directly against displacement-operator columns.
struct evolved_state {
    Eigen::VectorXcd amplitudes;
    std::vector<double> norm_history;  // |psi| after every step
    double time = 0.0;
    double dt = 0.0;
    long steps = 0;
    double norm_drift = 0.0;  // max |norm - 1| along the way
    double tail_mass = 0.0;   // probability in the top eighth of the basis

    std::vector<double> level_probabilities() const;
};

// Explicit step variant: dt is snapped down so the window divides evenly.
// Throws step_size_error when the norm gate trips and truncation_error when
// probability reaches the truncation boundary.
evolved_state integrate_tdse(const field_spec& field, const physical_params& params,
                             const derived_scales& scales, int dimension, int initial_level,
                             double dt, const oracle_settings& settings = {});

// Auto variant: dimension from the support heuristic, dt from steps_per_period.
evolved_state integrate_tdse(const field_spec& field, const physical_params& params,
                             const derived_scales& scales, int initial_level,
                             const oracle_settings& settings = {});

}  // namespace landau
