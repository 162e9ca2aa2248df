#pragma once

#include <complex>
#include <span>
#include <string>
#include <vector>

#include "landau/field.hpp"
#include "landau/path.hpp"
#include "landau/physics.hpp"

namespace landau {

struct quadrature_settings {
    // Panels per period of the fastest oscillation (the e^{-i omega s} factor
    // or the quickest field primitive, whichever is shorter). 20 is the
    // resolved default; forcing fewer flags the result as under-resolved.
    int panels_per_period = 20;
    int nodes = 8;                 // Gauss-Legendre nodes per panel, 2..64
    double max_panel_width = 0.0;  // 0 = derive from panels_per_period

    void validate() const;
};

struct resolution_report {
    double panel_width = 0.0;
    std::size_t panel_count = 0;
    // |I_h - I_{h/2}|: step-halving error estimate for the analytic part.
    double richardson_estimate = 0.0;
    bool under_resolved = false;
    // Tabulated primitives integrate by trapezoid on their own sample grid and
    // are not covered by the halving estimate.
    bool sampled_contribution = false;
    std::vector<std::string> warnings;
};

// The windowed-Fourier drive parameter
//   u(t) = -(c / 2B) * integral_0^t e^{-i omega s} (E1(s) - i E2(s)) ds
// evaluated at t_final, together with the curve u(t) traced over the window
// and the quadrature diagnostics.
struct drive_parameter {
    std::complex<double> u;
    double x = 0.0;  // |u k|^2
    planar_path u_path;
    resolution_report report;
};

drive_parameter compute_u(const field_spec& field, const physical_params& params,
                          const derived_scales& scales, double t_final,
                          const quadrature_settings& settings = {});

// |u(t_final)| as a function of the analysis frequency, holding the field and
// coupling fixed: the windowed Fourier magnitude the drive picks out at the
// cyclotron frequency.
struct spectrum_point {
    double omega;
    double abs_u;
};
std::vector<spectrum_point> u_spectrum_sweep(const field_spec& field,
                                             const physical_params& params,
                                             const derived_scales& scales, double t_final,
                                             std::span<const double> omega_values,
                                             const quadrature_settings& settings = {});

}  // namespace landau
