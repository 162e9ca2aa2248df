#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "landau/field.hpp"
#include "landau/fock.hpp"
#include "landau/fourier.hpp"
#include "landau/physics.hpp"

namespace landau {

struct verify_case {
    std::string name;
    field_spec field;
    int initial_level = 0;
};

// Cross-validation of the two routes that must never share code: closed-form
// displacement elements on one side, direct integration of the Schrodinger
// equation in the truncated basis on the other.
struct verify_case_report {
    std::string name;
    std::uint64_t field_hash = 0;
    int n_initial = 0;
    int dimension = 0;
    double step = 0.0;
    double x = 0.0;
    double max_abs_prob_error = 0.0;
    double norm_drift = 0.0;
    double tail_mass = 0.0;
    bool passed = false;
    std::string error;  // set when the oracle aborted (step/truncation gates)
};

struct verify_report {
    double tolerance = 0.0;
    bool all_passed = false;
    std::vector<verify_case_report> cases;
};

// The standard shapes: a resonant cosine burst, a carrier gaussian pulse, and
// seeded piecewise-constant noise.
std::vector<verify_case> default_verify_cases();

verify_report run_verification(const physical_params& params, const derived_scales& scales,
                               std::span<const verify_case> cases, std::span<const int> levels,
                               double tolerance, const quadrature_settings& quad = {},
                               const oracle_settings& oracle = {});

}  // namespace landau
