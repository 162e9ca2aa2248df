#include "landau/io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

namespace landau {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_sweep_csv(std::ostream& os, const std::string& index_name,
                     std::span<const sweep_row> rows) {
    os << index_name << ",survival,transition,fejer_transition\n";
    for (const auto& r : rows)
        os << format_number(r.index) << ',' << format_number(r.survival) << ','
           << format_number(r.transition) << ',' << format_number(r.fejer_transition) << '\n';
}

void write_path_csv(std::ostream& os, const planar_path& path) {
    os << "t,p1,p2\n";
    for (const auto& p : path.points)
        os << format_number(p.t) << ',' << format_number(p.p1) << ',' << format_number(p.p2)
           << '\n';
}

void write_matrix_csv(std::ostream& os, const transition_table& table) {
    os << "m,probability\n";
    for (std::size_t m = 0; m < table.probabilities.size(); ++m)
        os << m << ',' << format_number(table.probabilities[m]) << '\n';
}

void write_spectrum_csv(std::ostream& os, std::span<const spectrum_point> points,
                        double omega_marked) {
    // nearest sweep point to the physical cyclotron frequency gets flagged
    std::size_t mark = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points.size(); ++i) {
        double d = std::fabs(points[i].omega - omega_marked);
        if (d < best) {
            best = d;
            mark = i;
        }
    }
    os << "omega,abs_u,at_cyclotron\n";
    for (std::size_t i = 0; i < points.size(); ++i)
        os << format_number(points[i].omega) << ',' << format_number(points[i].abs_u) << ','
           << (points.empty() ? 0 : (i == mark ? 1 : 0)) << '\n';
}

namespace {
using nlohmann::json;
}

std::string drive_summary_json(const drive_parameter& drive, const geometric_phases& phases) {
    json j;
    j["u_re"] = drive.u.real();
    j["u_im"] = drive.u.imag();
    j["abs_u"] = std::abs(drive.u);
    j["x"] = drive.x;
    j["beta"] = phases.beta;
    j["gamma"] = phases.gamma;
    j["area_drift"] = phases.area_drift;
    j["area_drive"] = phases.area_drive;
    j["quadrature"] = {{"panel_width", drive.report.panel_width},
                       {"panel_count", drive.report.panel_count},
                       {"richardson_estimate", drive.report.richardson_estimate},
                       {"under_resolved", drive.report.under_resolved},
                       {"sampled_contribution", drive.report.sampled_contribution},
                       {"warnings", drive.report.warnings}};
    return j.dump(2);
}

std::string matrix_json(const transition_table& table) {
    json j;
    j["n_source"] = table.n_source;
    j["alpha_re"] = table.alpha.real();
    j["alpha_im"] = table.alpha.imag();
    j["m_max"] = table.m_max;
    j["row_sum"] = table.row_sum;
    j["tail_mass"] = table.tail_mass;
    j["diagonal"] = table.diagonal;
    j["up_mass"] = table.up_mass;
    j["down_mass"] = table.down_mass;
    j["probabilities"] = table.probabilities;
    return j.dump(2);
}

std::string verify_report_json(const verify_report& report) {
    json j;
    j["tolerance"] = report.tolerance;
    j["all_passed"] = report.all_passed;
    j["cases"] = json::array();
    for (const auto& c : report.cases) {
        json cj;
        cj["name"] = c.name;
        cj["field_hash"] = c.field_hash;
        cj["n_initial"] = c.n_initial;
        cj["dimension"] = c.dimension;
        cj["step"] = c.step;
        cj["x"] = c.x;
        cj["max_abs_prob_error"] = c.max_abs_prob_error;
        cj["norm_drift"] = c.norm_drift;
        cj["tail_mass"] = c.tail_mass;
        cj["passed"] = c.passed;
        if (!c.error.empty()) cj["error"] = c.error;
        j["cases"].push_back(std::move(cj));
    }
    return j.dump(2);
}

}  // namespace landau
