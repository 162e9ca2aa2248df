#include "landau/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

#include "landau/errors.hpp"

namespace landau {

void quadrature_settings::validate() const {
    if (panels_per_period < 1)
        throw std::invalid_argument("quadrature: panels_per_period must be >= 1");
    if (nodes < 2 || nodes > 64)
        throw std::invalid_argument("quadrature: nodes must lie in [2, 64]");
    if (!std::isfinite(max_panel_width) || max_panel_width < 0.0)
        throw std::invalid_argument("quadrature: max_panel_width must be finite and >= 0");
}

namespace {

struct gl_rule {
    std::vector<double> x, w;  // nodes/weights on [-1, 1]
};

// Gauss-Legendre abscissas by Newton iteration on P_n; standard construction.
const gl_rule& gauss_legendre(int n) {
    static std::map<int, gl_rule> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    gl_rule r;
    r.x.resize(n);
    r.w.resize(n);
    int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double dz = p0 / pp;
            z -= dz;
            if (std::fabs(dz) < 1e-15) break;
        }
        r.x[i] = -z;
        r.x[n - 1 - i] = z;
        r.w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        r.w[n - 1 - i] = r.w[i];
    }
    return cache.emplace(n, std::move(r)).first->second;
}

struct integrand {
    const field_spec* field;
    double omega;
    bool skip_sampled;

    // e^{-i omega s} * conj(E(s)) restricted to the analytic primitives
    std::complex<double> operator()(double s) const {
        double e1 = 0.0, e2 = 0.0;
        if (skip_sampled) {
            if (s >= field->t_start() && s <= field->t_end()) {
                auto full = field->eval(s);
                e1 = full[0];
                e2 = full[1];
                for (const auto& p : field->primitives())
                    if (auto* sp = std::get_if<sampled_signal>(&p)) {
                        auto v = sp->table.eval(s);
                        e1 -= v[0];
                        e2 -= v[1];
                    }
            }
        } else {
            auto full = field->eval(s);
            e1 = full[0];
            e2 = full[1];
        }
        return std::polar(1.0, -omega * s) * std::complex<double>(e1, -e2);
    }
};

std::complex<double> gl_panel(const integrand& f, const gl_rule& rule, double a, double b) {
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    std::complex<double> acc = 0.0;
    for (std::size_t i = 0; i < rule.x.size(); ++i) acc += rule.w[i] * f(mid + half * rule.x[i]);
    return half * acc;
}

// Trapezoid accumulation of one tabulated primitive over [lo, hi] on the
// table's own nodes (the data is the best information available; no
// resampling beyond the forced clip edges).  Returns prefix sums at the
// clipped node times for path reconstruction.
struct sampled_cumulative {
    std::vector<double> t;
    std::vector<std::complex<double>> prefix;  // integral from t.front() to t[i]
    double omega = 0.0;
    const sampled_field* table = nullptr;

    std::complex<double> g(double s) const {
        auto v = table->eval(s);
        return std::polar(1.0, -omega * s) * std::complex<double>(v[0], -v[1]);
    }

    std::complex<double> total() const { return prefix.empty() ? 0.0 : prefix.back(); }

    // integral from t.front() to s, s inside [t.front(), t.back()]
    std::complex<double> at(double s) const {
        if (prefix.empty() || s <= t.front()) return 0.0;
        if (s >= t.back()) return prefix.back();
        auto it = std::upper_bound(t.begin(), t.end(), s);
        std::size_t j = static_cast<std::size_t>(it - t.begin()) - 1;
        return prefix[j] + 0.5 * (s - t[j]) * (g(t[j]) + g(s));
    }
};

sampled_cumulative build_sampled_cumulative(const sampled_field& table, double omega, double lo,
                                            double hi) {
    sampled_cumulative c;
    c.omega = omega;
    c.table = &table;
    double a = std::max(lo, table.rows.front().t);
    double b = std::min(hi, table.rows.back().t);
    if (!(a < b)) return c;
    c.t.push_back(a);
    for (const auto& r : table.rows)
        if (r.t > a && r.t < b) c.t.push_back(r.t);
    c.t.push_back(b);
    c.prefix.resize(c.t.size());
    c.prefix[0] = 0.0;
    for (std::size_t j = 1; j < c.t.size(); ++j)
        c.prefix[j] =
            c.prefix[j - 1] + 0.5 * (c.t[j] - c.t[j - 1]) * (c.g(c.t[j - 1]) + c.g(c.t[j]));
    return c;
}

}  // namespace

drive_parameter compute_u(const field_spec& field, const physical_params& params,
                          const derived_scales& scales, double t_final,
                          const quadrature_settings& settings) {
    params.validate();
    settings.validate();
    if (!std::isfinite(t_final) || t_final < 0.0)
        throw std::invalid_argument("compute_u: t_final must be finite and >= 0");

    drive_parameter out;
    const double two_pi = 2.0 * std::numbers::pi;
    double period = scales.omega != 0.0 ? two_pi / std::fabs(scales.omega)
                                        : std::numeric_limits<double>::infinity();
    double ts = std::min(period, field.fastest_timescale());
    if (!std::isfinite(ts)) ts = std::max(1.0, t_final);  // nothing oscillates: one scale only
    double h_resolved = ts / 20.0;
    double h = settings.max_panel_width > 0.0 ? settings.max_panel_width
                                              : ts / settings.panels_per_period;
    out.report.panel_width = h;
    if (h > h_resolved * (1.0 + 1e-9)) {
        out.report.under_resolved = true;
        out.report.warnings.push_back("panel width exceeds the resolved setting (timescale/20)");
    }

    // active integration range: field window clipped to [0, t_final]
    double lo = std::max(0.0, field.t_start());
    double hi = std::min(t_final, field.t_end());

    integrand f{&field, scales.omega, field.has_sampled()};
    const gl_rule& rule = gauss_legendre(settings.nodes);
    double coupling = -params.c / (2.0 * params.B);

    std::vector<sampled_cumulative> tails;
    if (field.has_sampled() && lo < hi)
        for (const auto& p : field.primitives())
            if (auto* sp = std::get_if<sampled_signal>(&p)) {
                auto c = build_sampled_cumulative(sp->table, scales.omega, lo, hi);
                if (!c.t.empty()) {
                    tails.push_back(std::move(c));
                    out.report.sampled_contribution = true;
                }
            }

    std::vector<planar_path::point> path;
    auto push_path = [&](double t, std::complex<double> analytic_cum) {
        std::complex<double> s = 0.0;
        for (const auto& c : tails) s += c.at(t);
        std::complex<double> u = coupling * (analytic_cum + s);
        if (!path.empty() && path.back().t == t) return;
        path.push_back({t, u.real(), u.imag()});
    };

    push_path(0.0, 0.0);

    std::complex<double> coarse = 0.0, fine = 0.0;
    std::size_t panel_count = 0;
    if (lo < hi) {
        if (lo > 0.0) push_path(lo, 0.0);
        std::vector<double> knots;
        knots.push_back(lo);
        for (double bp : field.breakpoints())
            if (bp > lo && bp < hi) knots.push_back(bp);
        knots.push_back(hi);
        std::sort(knots.begin(), knots.end());
        knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

        for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
            double a = knots[i], b = knots[i + 1];
            int nsub = std::max(1, static_cast<int>(std::ceil((b - a) / h - 1e-12)));
            for (int j = 0; j < nsub; ++j) {
                double p = a + (b - a) * j / nsub;
                double q = (j + 1 == nsub) ? b : a + (b - a) * (j + 1) / nsub;
                double mid = 0.5 * (p + q);
                coarse += gl_panel(f, rule, p, q);
                fine += gl_panel(f, rule, p, mid) + gl_panel(f, rule, mid, q);
                ++panel_count;
                push_path(q, fine);
            }
        }
    }
    out.report.panel_count = panel_count;
    out.report.richardson_estimate = std::abs(coarse - fine) * std::fabs(coupling);

    std::complex<double> sampled_total = 0.0;
    for (const auto& c : tails) sampled_total += c.total();

    out.u = coupling * (fine + sampled_total);
    if (!std::isfinite(out.u.real()) || !std::isfinite(out.u.imag()))
        throw numeric_error("compute_u: integrand produced non-finite values");
    out.x = intensity(out.u, scales);

    if (t_final > (path.empty() ? 0.0 : path.back().t)) push_path(t_final, fine);
    out.u_path = planar_path::from_points(std::move(path));
    return out;
}

std::vector<spectrum_point> u_spectrum_sweep(const field_spec& field,
                                             const physical_params& params,
                                             const derived_scales& scales, double t_final,
                                             std::span<const double> omega_values,
                                             const quadrature_settings& settings) {
    std::vector<spectrum_point> pts;
    pts.reserve(omega_values.size());
    for (double w : omega_values) {
        if (!std::isfinite(w)) throw std::invalid_argument("spectrum sweep: non-finite omega");
        derived_scales s = scales;
        s.omega = w;
        auto d = compute_u(field, params, s, t_final, settings);
        pts.push_back({w, std::abs(d.u)});
    }
    return pts;
}

}  // namespace landau
