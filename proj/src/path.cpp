#include "landau/path.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace landau {

planar_path planar_path::from_points(std::vector<point> pts) {
    if (pts.empty()) throw std::invalid_argument("path: needs at least one point");
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const point& p = pts[i];
        if (!std::isfinite(p.t) || !std::isfinite(p.p1) || !std::isfinite(p.p2))
            throw std::invalid_argument("path: non-finite sample at index " + std::to_string(i));
        if (i > 0 && !(pts[i - 1].t < p.t))
            throw std::invalid_argument("path: times must be strictly increasing (index " +
                                        std::to_string(i) + ")");
    }
    planar_path path;
    path.points = std::move(pts);
    return path;
}

double closed_area(const planar_path& path) {
    const auto& pts = path.points;
    if (pts.size() < 3) return 0.0;
    // shoelace over the polygon closed by the chord last -> first
    double twice = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& a = pts[i];
        const auto& b = pts[(i + 1) % pts.size()];
        twice += a.p1 * b.p2 - b.p1 * a.p2;
    }
    return 0.5 * twice;
}

namespace {

// 4-node Gauss-Legendre on [-1,1]; plenty for the smooth-in-between segments
// once the grid is split at every field breakpoint.
constexpr double gl4_x[2] = {0.3399810435848562648, 0.8611363115940525752};
constexpr double gl4_w[2] = {0.6521451548625461426, 0.3478548451374538574};

// integral over [a,b] of (E2, -E1)
void segment_integral(const field_spec& field, double a, double b, double out[2]) {
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s1 = 0.0, s2 = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (double sgn : {-1.0, 1.0}) {
            auto e = field.eval(mid + sgn * half * gl4_x[i]);
            s1 += gl4_w[i] * e[1];
            s2 -= gl4_w[i] * e[0];
        }
    }
    out[0] = half * s1;
    out[1] = half * s2;
}

}  // namespace

drift_result drift_path(const field_spec& field, const physical_params& params,
                        std::span<const double> grid) {
    params.validate();
    if (grid.empty()) throw std::invalid_argument("drift_path: empty grid");
    for (std::size_t i = 1; i < grid.size(); ++i)
        if (!(grid[i - 1] < grid[i]))
            throw std::invalid_argument("drift_path: grid must be strictly increasing");

    auto breaks = field.breakpoints();
    double scale = params.c / params.B;

    drift_result out;
    out.path.points.reserve(grid.size());

    // R at grid[0]: integral from 0 (where the evolution starts) to grid[0],
    // each stretch split at breakpoints so the panels see smooth data
    double r[2] = {0.0, 0.0};
    auto advance = [&](double a, double b) {
        if (a == b) return;
        double sign = 1.0;
        if (a > b) {
            std::swap(a, b);
            sign = -1.0;
        }
        double cur = a;
        double seg[2];
        for (double bp : breaks) {
            if (bp > cur && bp < b) {
                segment_integral(field, cur, bp, seg);
                r[0] += sign * scale * seg[0];
                r[1] += sign * scale * seg[1];
                cur = bp;
            }
        }
        segment_integral(field, cur, b, seg);
        r[0] += sign * scale * seg[0];
        r[1] += sign * scale * seg[1];
    };

    advance(0.0, grid[0]);
    out.path.points.push_back({grid[0], r[0], r[1]});
    double max_step = 0.0;
    for (std::size_t i = 1; i < grid.size(); ++i) {
        advance(grid[i - 1], grid[i]);
        out.path.points.push_back({grid[i], r[0], r[1]});
        max_step = std::fmax(max_step, grid[i] - grid[i - 1]);
    }

    double ts = field.fastest_timescale();
    if (std::isfinite(ts) && max_step > ts / 20.0 * (1.0 + 1e-9)) {
        out.under_resolved = true;
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "grid step %.3g exceeds fastest field timescale / 20 = %.3g", max_step,
                      ts / 20.0);
        out.warning = buf;
    }
    return out;
}

geometric_phases phases_from_paths(const planar_path& drift, const planar_path& drive,
                                   const physical_params& params) {
    params.validate();
    geometric_phases g;
    g.area_drift = closed_area(drift);
    g.area_drive = closed_area(drive);
    double base = params.q * params.B / (params.hbar * params.c);
    g.beta = -base * g.area_drift;
    g.gamma = -base * 4.0 * g.area_drive;
    return g;
}

}  // namespace landau
