#pragma once

#include <complex>
#include <optional>
#include <string>

#include "landau/field.hpp"
#include "landau/fock.hpp"
#include "landau/fourier.hpp"
#include "landau/physics.hpp"
#include "landau/transitions.hpp"

namespace landau {

struct matrix_request {
    int n = 0;
    std::optional<std::complex<double>> alpha;  // explicit argument wins
    std::optional<double> x;                    // else sqrt(x) up to phase
    transition_settings settings;
};

struct sweep_request {
    std::string kind = "levels";  // levels | intensity | spectrum
    // levels
    double x = 8.0;
    int n_min = 0, n_max = 160;
    // intensity
    int n = 100;
    double x_min = 0.0, x_max = 30.0;
    int points = 600;
    // spectrum
    double omega_min = 0.2, omega_max = 3.0;
    int omega_points = 200;
};

// Everything an experiment file can pin down.  One file, one run; the format
// is line-oriented and diff-friendly (see the README grammar), with a JSON
// twin for tooling.
struct run_config {
    physical_params params;
    std::optional<field_spec> field;
    std::optional<double> t_final;  // defaults to the field window end
    quadrature_settings quadrature;
    oracle_settings oracle;
    matrix_request matrix;
    sweep_request sweep;
    double verify_tolerance = 1e-6;
};

// Dispatches on extension: ".json" parses the JSON twin, anything else the
// line grammar.  Sampled-table paths resolve relative to the config file.
// Throws config_error / parse_error (with line numbers) on anything dubious;
// unknown keys are rejected, not ignored.
run_config load_config(const std::string& path);

run_config parse_config_text(const std::string& text, const std::string& base_dir);
run_config parse_config_json(const std::string& text, const std::string& base_dir);

}  // namespace landau
