// landau: inter-level transition probabilities for a charged particle in a
// magnetic field driven by a finite planar electric pulse.
//
// exit codes: 0 success, 2 bad configuration or usage, 3 numerical failure
// (norm drift, truncation, overflow).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "landau/config.hpp"
#include "landau/errors.hpp"
#include "landau/fock.hpp"
#include "landau/fourier.hpp"
#include "landau/io.hpp"
#include "landau/laguerre.hpp"
#include "landau/path.hpp"
#include "landau/transitions.hpp"
#include "landau/verify.hpp"

namespace {

using namespace landau;

struct common_options {
    std::string config_path;
    std::string out_path;
    std::string format = "csv";
    std::optional<std::uint64_t> seed;
};

run_config load_or_default(const common_options& opt) {
    run_config cfg;
    if (!opt.config_path.empty()) cfg = load_config(opt.config_path);
    if (opt.seed && cfg.field) cfg.field = cfg.field->with_noise_seed(*opt.seed);
    return cfg;
}

void emit(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream os(out_path);
    if (!os) throw config_error("cannot open output file: " + out_path);
    os << payload;
}

std::string rows_payload(const std::vector<sweep_row>& rows, const std::string& index_name,
                         const std::string& format) {
    if (format == "csv") {
        std::ostringstream os;
        write_sweep_csv(os, index_name, rows);
        return os.str();
    }
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : rows)
        j.push_back({{index_name, r.index},
                     {"survival", r.survival},
                     {"transition", r.transition},
                     {"fejer_transition", r.fejer_transition}});
    return j.dump(2);
}

int cmd_u(const common_options& opt, std::optional<double> t_final_flag) {
    run_config cfg = load_or_default(opt);
    if (!cfg.field) throw config_error("u: a [field] section is required");
    derived_scales scales = derive_scales(cfg.params);
    double t_final = t_final_flag ? *t_final_flag : cfg.t_final.value_or(cfg.field->t_end());

    drive_parameter drive = compute_u(*cfg.field, cfg.params, scales, t_final, cfg.quadrature);

    // drift trace over the same time knots makes the two loops comparable
    std::vector<double> grid;
    grid.reserve(drive.u_path.points.size());
    for (const auto& p : drive.u_path.points) grid.push_back(p.t);
    drift_result drift = drift_path(*cfg.field, cfg.params, grid);
    if (drift.under_resolved) drive.report.warnings.push_back("drift: " + drift.warning);

    geometric_phases ph = phases_from_paths(drift.path, drive.u_path, cfg.params);
    std::cout << drive_summary_json(drive, ph) << '\n';
    if (!opt.out_path.empty()) {
        std::ostringstream os;
        write_path_csv(os, drive.u_path);
        emit(os.str(), opt.out_path);
    }
    return 0;
}

int cmd_figure1(const common_options& opt, double x, int n_max) {
    if (!(x > 0.0)) throw config_error("figure1: --x must be positive");
    if (n_max < 0) throw config_error("figure1: --n-max must be >= 0");
    auto rows = sweep_over_levels(x, 0, n_max);
    emit(rows_payload(rows, "n", opt.format), opt.out_path);
    return 0;
}

int cmd_figure2(const common_options& opt, int n, double x_max, int points) {
    if (n < 0) throw config_error("figure2: --n must be >= 0");
    if (!(x_max > 0.0)) throw config_error("figure2: --x-max must be positive");
    if (points < 1) throw config_error("figure2: --points must be >= 1");
    std::vector<double> xs(points);
    for (int i = 1; i <= points; ++i) xs[i - 1] = x_max * i / points;
    auto rows = sweep_over_intensity(n, xs);
    emit(rows_payload(rows, "x", opt.format), opt.out_path);
    return 0;
}

int cmd_matrix(const common_options& opt, std::optional<int> n_flag, std::optional<double> x_flag,
               std::optional<double> are_flag, std::optional<double> aim_flag) {
    run_config cfg = load_or_default(opt);
    int n = n_flag.value_or(cfg.matrix.n);
    if (n < 0) throw config_error("matrix: source level must be >= 0");

    std::complex<double> alpha;
    if (are_flag || aim_flag) {
        alpha = {are_flag.value_or(0.0), aim_flag.value_or(0.0)};
    } else if (x_flag) {
        if (*x_flag < 0.0) throw config_error("matrix: --x must be >= 0");
        alpha = std::sqrt(*x_flag);  // probabilities see |alpha| only
    } else if (cfg.matrix.alpha) {
        alpha = *cfg.matrix.alpha;
    } else if (cfg.matrix.x) {
        if (*cfg.matrix.x < 0.0) throw config_error("matrix: x must be >= 0");
        alpha = std::sqrt(*cfg.matrix.x);
    } else if (cfg.field) {
        derived_scales scales = derive_scales(cfg.params);
        double t_final = cfg.t_final.value_or(cfg.field->t_end());
        drive_parameter drive =
            compute_u(*cfg.field, cfg.params, scales, t_final, cfg.quadrature);
        alpha = displacement_argument(drive.u, scales);
    } else {
        throw config_error("matrix: give --x, --alpha-re/--alpha-im, or a config with a field");
    }

    transition_table table = transition_matrix(n, alpha, cfg.matrix.settings);
    if (opt.format == "json") {
        emit(matrix_json(table), opt.out_path);
    } else {
        std::ostringstream os;
        write_matrix_csv(os, table);
        emit(os.str(), opt.out_path);
    }
    return 0;
}

int cmd_sweep(const common_options& opt, const std::string& kind_flag, std::optional<double> x_flag,
              std::optional<int> n_flag, std::optional<int> n_max_flag,
              std::optional<double> x_max_flag) {
    run_config cfg = load_or_default(opt);
    std::string kind = kind_flag.empty() ? cfg.sweep.kind : kind_flag;

    if (kind == "levels") {
        double x = x_flag.value_or(cfg.sweep.x);
        int n_max = n_max_flag.value_or(cfg.sweep.n_max);
        auto rows = sweep_over_levels(x, cfg.sweep.n_min, n_max);
        emit(rows_payload(rows, "n", opt.format), opt.out_path);
        return 0;
    }
    if (kind == "intensity") {
        int n = n_flag.value_or(cfg.sweep.n);
        double x_min = cfg.sweep.x_min;
        double x_max = x_max_flag.value_or(cfg.sweep.x_max);
        int points = cfg.sweep.points;
        if (points < 1) throw config_error("sweep: points must be >= 1");
        if (!(x_max >= x_min)) throw config_error("sweep: x_max must be >= x_min");
        std::vector<double> xs(points);
        if (points == 1)
            xs[0] = x_max;
        else
            for (int i = 0; i < points; ++i)
                xs[i] = x_min + (x_max - x_min) * i / (points - 1.0);
        auto rows = sweep_over_intensity(n, xs);
        emit(rows_payload(rows, "x", opt.format), opt.out_path);
        return 0;
    }
    if (kind == "spectrum") {
        if (!cfg.field) throw config_error("sweep spectrum: a config with a field is required");
        if (cfg.sweep.omega_points < 1)
            throw config_error("sweep: omega_points must be >= 1");
        derived_scales scales = derive_scales(cfg.params);
        double t_final = cfg.t_final.value_or(cfg.field->t_end());
        std::vector<double> omegas(cfg.sweep.omega_points);
        if (cfg.sweep.omega_points == 1)
            omegas[0] = cfg.sweep.omega_min;
        else
            for (int i = 0; i < cfg.sweep.omega_points; ++i)
                omegas[i] = cfg.sweep.omega_min + (cfg.sweep.omega_max - cfg.sweep.omega_min) *
                                                      i / (cfg.sweep.omega_points - 1.0);
        auto pts =
            u_spectrum_sweep(*cfg.field, cfg.params, scales, t_final, omegas, cfg.quadrature);
        std::ostringstream os;
        write_spectrum_csv(os, pts, scales.omega);
        emit(os.str(), opt.out_path);
        return 0;
    }
    throw config_error("sweep: kind must be levels, intensity or spectrum");
}

int cmd_verify(const common_options& opt, std::optional<double> tol_flag,
               std::optional<int> dim_flag, std::optional<int> spp_flag,
               std::vector<int> levels) {
    run_config cfg = load_or_default(opt);
    double tolerance = tol_flag.value_or(cfg.verify_tolerance);
    oracle_settings oracle = cfg.oracle;
    if (dim_flag) oracle.dimension = *dim_flag;
    if (spp_flag) oracle.steps_per_period = *spp_flag;

    std::vector<verify_case> cases;
    if (cfg.field) {
        cases.push_back({"config", *cfg.field, 0});
    } else {
        cases = default_verify_cases();
        if (opt.seed)
            for (auto& c : cases) c.field = c.field.with_noise_seed(*opt.seed);
    }
    if (levels.empty()) levels = {0, 3, 10};
    for (int n : levels)
        if (n < 0) throw config_error("verify: levels must be >= 0");

    derived_scales scales = derive_scales(cfg.params);
    verify_report report =
        run_verification(cfg.params, scales, cases, levels, tolerance, cfg.quadrature, oracle);
    emit(verify_report_json(report), opt.out_path);
    if (opt.out_path.empty()) std::cout << '\n';
    return report.all_passed ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Landau-level transition probabilities for finite-duration planar electric fields"};
    app.require_subcommand(1);

    common_options opt;
    auto add_common = [&](CLI::App* sub, bool with_format) {
        sub->add_option("--config", opt.config_path, "experiment file (line grammar or .json)");
        sub->add_option("--out", opt.out_path, "write the payload to a file instead of stdout");
        sub->add_option("--seed", opt.seed, "override every noise primitive seed");
        if (with_format)
            sub->add_option("--format", opt.format, "csv or json")
                ->check(CLI::IsMember({"csv", "json"}));
    };

    auto* c_u = app.add_subcommand("u", "drive parameter, intensity and geometric phases");
    std::optional<double> t_final_flag;
    c_u->add_option("--t-final", t_final_flag, "evaluate u at this time (default: window end)");
    add_common(c_u, false);

    auto* c_f1 = app.add_subcommand("figure1", "survival/transition across levels at fixed x");
    double f1_x = 0.0;
    int f1_nmax = 160;
    c_f1->add_option("--x", f1_x, "intensity parameter x = |u k|^2")->required();
    c_f1->add_option("--n-max", f1_nmax, "highest level (default 160)");
    add_common(c_f1, true);

    auto* c_f2 = app.add_subcommand("figure2", "survival/transition versus x at fixed level");
    int f2_n = 100, f2_points = 600;
    double f2_xmax = 30.0;
    c_f2->add_option("--n", f2_n, "level (default 100)");
    c_f2->add_option("--x-max", f2_xmax, "upper end of the x grid (default 30)");
    c_f2->add_option("--points", f2_points, "grid points (default 600)");
    add_common(c_f2, true);

    auto* c_mx = app.add_subcommand("matrix", "one row of |<m|D(alpha)|n>|^2");
    std::optional<int> mx_n;
    std::optional<double> mx_x, mx_are, mx_aim;
    c_mx->add_option("--n", mx_n, "source level");
    c_mx->add_option("--x", mx_x, "intensity (alpha = sqrt(x) up to phase)");
    c_mx->add_option("--alpha-re", mx_are, "displacement argument, real part");
    c_mx->add_option("--alpha-im", mx_aim, "displacement argument, imaginary part");
    add_common(c_mx, true);

    auto* c_sw = app.add_subcommand("sweep", "level, intensity or spectrum sweeps");
    std::string sw_kind;
    std::optional<double> sw_x, sw_xmax;
    std::optional<int> sw_n, sw_nmax;
    c_sw->add_option("--kind", sw_kind, "levels | intensity | spectrum");
    c_sw->add_option("--x", sw_x, "intensity for level sweeps");
    c_sw->add_option("--n", sw_n, "level for intensity sweeps");
    c_sw->add_option("--n-max", sw_nmax, "highest level for level sweeps");
    c_sw->add_option("--x-max", sw_xmax, "upper x for intensity sweeps");
    add_common(c_sw, true);

    auto* c_vf = app.add_subcommand("verify", "closed form vs direct integration");
    std::optional<double> vf_tol;
    std::optional<int> vf_dim, vf_spp;
    std::vector<int> vf_levels;
    c_vf->add_option("--tolerance", vf_tol, "per-probability tolerance (default 1e-6)");
    c_vf->add_option("--dimension", vf_dim, "truncated basis size (default: auto)");
    c_vf->add_option("--steps-per-period", vf_spp, "integrator steps per cyclotron period");
    c_vf->add_option("--levels", vf_levels, "initial levels (default 0 3 10)");
    add_common(c_vf, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (c_u->parsed()) return cmd_u(opt, t_final_flag);
        if (c_f1->parsed()) return cmd_figure1(opt, f1_x, f1_nmax);
        if (c_f2->parsed()) return cmd_figure2(opt, f2_n, f2_xmax, f2_points);
        if (c_mx->parsed()) return cmd_matrix(opt, mx_n, mx_x, mx_are, mx_aim);
        if (c_sw->parsed()) return cmd_sweep(opt, sw_kind, sw_x, sw_n, sw_nmax, sw_xmax);
        if (c_vf->parsed()) return cmd_verify(opt, vf_tol, vf_dim, vf_spp, vf_levels);
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const numeric_error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const std::overflow_error& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "unexpected failure: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
