#include "landau/verify.hpp"

#include <cmath>
#include <numbers>

#include "landau/errors.hpp"
#include "landau/transitions.hpp"

namespace landau {

std::vector<verify_case> default_verify_cases() {
    std::vector<verify_case> cases;
    const double two_pi = 2.0 * std::numbers::pi;

    {
        // resonant cosine burst, four cyclotron periods; lands on u = -1 exactly
        sinusoid_signal s;
        s.target = field_component::E1;
        s.amplitude = 1.0 / two_pi;
        s.angular_frequency = 1.0;
        cases.push_back({"cosine", field_spec(0.0, 4.0 * two_pi, {s}), 0});
    }
    {
        gaussian_pulse_signal g;
        g.target = field_component::E1;
        g.amplitude = 1.0;
        g.center = 6.0;
        g.width = 1.0;
        g.carrier_angular_frequency = 1.0;
        g.carrier_phase = 0.3;
        cases.push_back({"gaussian", field_spec(0.0, 12.0, {g}), 0});
    }
    {
        white_noise_signal w;
        w.target = field_component::E1;
        w.amplitude = 2.5;
        w.sample_step = 0.05;
        w.seed = 42;
        cases.push_back({"noise", field_spec(0.0, 15.0, {w}), 0});
    }
    return cases;
}

verify_report run_verification(const physical_params& params, const derived_scales& scales,
                               std::span<const verify_case> cases, std::span<const int> levels,
                               double tolerance, const quadrature_settings& quad,
                               const oracle_settings& oracle) {
    if (!(tolerance > 0.0)) throw std::invalid_argument("verification tolerance must be positive");
    verify_report report;
    report.tolerance = tolerance;
    report.all_passed = true;

    for (const auto& vc : cases) {
        std::vector<int> level_list(levels.begin(), levels.end());
        if (level_list.empty()) level_list.push_back(vc.initial_level);

        // the analytic route: windowed Fourier coefficient -> displacement
        drive_parameter drive = compute_u(vc.field, params, scales, vc.field.t_end(), quad);
        std::complex<double> alpha = displacement_argument(drive.u, scales);
        double aa = std::norm(alpha);

        for (int n : level_list) {
            verify_case_report row;
            row.name = vc.name + "/n=" + std::to_string(n);
            row.field_hash = vc.field.content_hash();
            row.n_initial = n;
            row.x = drive.x;
            try {
                oracle_settings os = oracle;
                if (os.dimension <= 0) {
                    // size the basis from the measured drive, not the analytic
                    // probabilities under test; the tail gate still checks it
                    os.dimension = ((default_m_max(n, aa) + 24 + 31) / 32) * 32;
                }
                evolved_state ev = integrate_tdse(vc.field, params, scales, n, os);
                row.dimension = static_cast<int>(ev.amplitudes.size());
                row.step = ev.dt;
                row.norm_drift = ev.norm_drift;
                row.tail_mass = ev.tail_mass;
                auto numeric = ev.level_probabilities();
                double worst = 0.0;
                for (std::size_t m = 0; m < numeric.size(); ++m) {
                    double analytic =
                        std::norm(displacement_element(static_cast<int>(m), n, alpha));
                    worst = std::fmax(worst, std::fabs(numeric[m] - analytic));
                }
                row.max_abs_prob_error = worst;
                row.passed = worst <= tolerance;
            } catch (const numeric_error& e) {
                row.passed = false;
                row.error = e.what();
            }
            if (!row.passed) report.all_passed = false;
            report.cases.push_back(std::move(row));
        }
    }
    return report;
}

}  // namespace landau
