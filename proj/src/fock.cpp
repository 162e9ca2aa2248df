#include "landau/fock.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "landau/errors.hpp"
#include "landau/transitions.hpp"

namespace landau {

truncated_ladder truncated_ladder::make(int n) {
    if (n < 1) throw std::invalid_argument("truncated_ladder: dimension must be >= 1");
    truncated_ladder t;
    t.dimension = n;
    t.lowering = Eigen::MatrixXd::Zero(n, n);
    t.raising = Eigen::MatrixXd::Zero(n, n);
    t.number = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        t.lowering(i, i + 1) = std::sqrt(i + 1.0);
        t.raising(i + 1, i) = std::sqrt(i + 1.0);
    }
    for (int i = 0; i < n; ++i) t.number(i, i) = i;
    return t;
}

int displacement_guard_band(std::complex<double> alpha, int n) {
    int band = static_cast<int>(std::ceil(4.0 * std::abs(alpha) * std::sqrt(n)));
    return std::min(band, n / 4);
}

Eigen::MatrixXcd displacement_matrix(std::complex<double> alpha, int n) {
    if (n < 1) throw std::invalid_argument("displacement_matrix: dimension must be >= 1");
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
        throw std::invalid_argument("displacement_matrix: alpha must be finite");
    double aa = std::norm(alpha);
    if (n < default_m_max(0, aa))
        throw truncation_error(
            "displacement_matrix: dimension below the support heuristic for |alpha|; "
            "edge corruption would reach the interior",
            aa);

    // generator G = alpha a^dag - conj(alpha) a (bidiagonal)
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i + 1 < n; ++i) {
        double r = std::sqrt(i + 1.0);
        g(i + 1, i) = alpha * r;
        g(i, i + 1) = -std::conj(alpha) * r;
    }

    // scaling and squaring: bring the 1-norm under 1, run the Taylor series to
    // machine-epsilon convergence, square back up
    double norm1 = g.cwiseAbs().colwise().sum().maxCoeff();
    int squarings = 0;
    if (norm1 > 1.0) squarings = static_cast<int>(std::ceil(std::log2(norm1)));
    Eigen::MatrixXcd a = g / std::pow(2.0, squarings);

    Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(n, n);
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(n, n);
    for (int k = 1; k <= 40; ++k) {
        term = (term * a) / static_cast<double>(k);
        result += term;
        double t1 = term.cwiseAbs().colwise().sum().maxCoeff();
        if (t1 < 1e-18) break;
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

double interior_unitarity_defect(const Eigen::MatrixXcd& d, std::complex<double> alpha) {
    int n = static_cast<int>(d.rows());
    int band = displacement_guard_band(alpha, n);
    int keep = n - band;
    if (keep < 1) return std::numeric_limits<double>::infinity();
    Eigen::MatrixXcd block = d.leftCols(keep);
    Eigen::MatrixXcd gram = block.adjoint() * block;
    gram -= Eigen::MatrixXcd::Identity(keep, keep);
    return gram.cwiseAbs().maxCoeff();
}

namespace {

// d psi/dt = -(i/hbar) H psi with the tridiagonal-free structure written out:
//   (H psi)_n = [hbar omega (n + 1/2) + offset] psi_n
//             + lambda sqrt(n+1) psi_{n+1} + conj(lambda) sqrt(n) psi_{n-1}
void rhs(const Eigen::VectorXcd& psi, std::complex<double> lambda, double hbar_omega,
         double offset, double hbar, Eigen::VectorXcd& out) {
    const auto n = psi.size();
    const std::complex<double> lam_c = std::conj(lambda);
    for (Eigen::Index i = 0; i < n; ++i) {
        std::complex<double> h = (hbar_omega * (i + 0.5) + offset) * psi[i];
        if (i + 1 < n) h += lambda * std::sqrt(i + 1.0) * psi[i + 1];
        if (i > 0) h += lam_c * std::sqrt(static_cast<double>(i)) * psi[i - 1];
        out[i] = std::complex<double>(0.0, -1.0 / hbar) * h;
    }
}

}  // namespace

evolved_state integrate_tdse(const field_spec& field, const physical_params& params,
                             const derived_scales& scales, int dimension, int initial_level,
                             double dt, const oracle_settings& settings) {
    params.validate();
    if (dimension < 2) throw std::invalid_argument("integrate_tdse: dimension must be >= 2");
    if (initial_level < 0 || initial_level >= dimension)
        throw std::invalid_argument("integrate_tdse: initial level outside the basis");
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw std::invalid_argument("integrate_tdse: step must be positive");

    double t_end = field.t_end();
    double t_begin = std::max(0.0, field.t_start());
    double span = t_end - t_begin;
    if (span <= 0.0) throw std::invalid_argument("integrate_tdse: empty evolution window");

    // Integrate each smooth stretch separately: steps never straddle a field
    // discontinuity (noise cells, pulse edges), which would wreck the
    // integrator's order.  Within a stretch the step snaps down to divide it.
    std::vector<double> seg{t_begin};
    for (double b : field.breakpoints())
        if (b > t_begin && b < t_end) seg.push_back(b);
    seg.push_back(t_end);

    double lam_scale = params.hbar * scales.k * params.c / (2.0 * params.B);
    auto lambda_of = [&](double t, bool left_limit) {
        // lambda(t) = -i hbar k (c/2B) conj(E(t)); at a stretch end the field
        // belongs to the stretch we are leaving, hence the left limit
        if (left_limit) t = std::nextafter(std::nextafter(t, t_begin), t_begin);
        std::complex<double> e = field.eval_complex(t);
        return std::complex<double>(0.0, -1.0) * lam_scale * std::conj(e);
    };
    double hw = params.hbar * scales.omega;

    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(dimension);
    psi[initial_level] = 1.0;
    Eigen::VectorXcd k1(dimension), k2(dimension), k3(dimension), k4(dimension),
        tmp(dimension);

    evolved_state ev;
    ev.norm_history.push_back(1.0);

    for (std::size_t si = 0; si + 1 < seg.size(); ++si) {
        double a = seg[si], b = seg[si + 1];
        long steps = std::max(1L, static_cast<long>(std::ceil((b - a) / dt - 1e-9)));
        double h = (b - a) / static_cast<double>(steps);
        ev.dt = std::fmax(ev.dt, h);
        for (long s = 0; s < steps; ++s) {
            double t = a + static_cast<double>(s) * h;
            std::complex<double> l1 = lambda_of(t, false);
            std::complex<double> l2 = lambda_of(t + 0.5 * h, false);
            std::complex<double> l3 = lambda_of(t + h, s + 1 == steps);

            rhs(psi, l1, hw, settings.energy_offset, params.hbar, k1);
            tmp = psi + (0.5 * h) * k1;
            rhs(tmp, l2, hw, settings.energy_offset, params.hbar, k2);
            tmp = psi + (0.5 * h) * k2;
            rhs(tmp, l2, hw, settings.energy_offset, params.hbar, k3);
            tmp = psi + h * k3;
            rhs(tmp, l3, hw, settings.energy_offset, params.hbar, k4);
            psi += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

            ++ev.steps;
            double norm = psi.norm();
            ev.norm_history.push_back(norm);
            double drift = std::fabs(norm - 1.0);
            if (drift > ev.norm_drift) ev.norm_drift = drift;
            if (drift > settings.norm_tolerance) {
                char msg[160];
                std::snprintf(msg, sizeof msg,
                              "integrate_tdse: norm drifted by %.3g at t=%.6g; "
                              "the step is too coarse for this drive",
                              drift, t + h);
                throw step_size_error(msg, drift);
            }
        }
    }

    // divide out the free phases so the state sits in the frame the
    // closed-form elements are written in
    double elapsed = span;
    for (int i = 0; i < dimension; ++i)
        psi[i] *= std::polar(1.0, scales.omega * (i + 0.5) * elapsed);

    ev.amplitudes = std::move(psi);
    ev.time = t_end;

    int guard = std::max(1, dimension / 8);
    for (int i = dimension - guard; i < dimension; ++i)
        ev.tail_mass += std::norm(ev.amplitudes[i]);
    if (ev.tail_mass > settings.tail_threshold)
        throw truncation_error(
            "integrate_tdse: probability " + std::to_string(ev.tail_mass) +
                " reached the truncation boundary; enlarge the basis",
            ev.tail_mass);
    return ev;
}

evolved_state integrate_tdse(const field_spec& field, const physical_params& params,
                             const derived_scales& scales, int initial_level,
                             const oracle_settings& settings) {
    if (initial_level < 0) throw std::invalid_argument("integrate_tdse: level must be >= 0");
    if (settings.steps_per_period < 1)
        throw std::invalid_argument("integrate_tdse: steps_per_period must be >= 1");

    int dimension = settings.dimension;
    if (dimension <= 0) {
        // rough drive strength from the field scale: enough to place the
        // support heuristic; the tail gate catches underestimates
        double dur = field.t_end() - std::max(0.0, field.t_start());
        double peak = 0.0;
        for (int i = 0; i <= 64; ++i) {
            auto e = field.eval(std::max(0.0, field.t_start()) + dur * i / 64.0);
            peak = std::fmax(peak, std::hypot(e[0], e[1]));
        }
        double alpha_guess = scales.k * params.c / (2.0 * params.B) * peak * dur;
        double aa = alpha_guess * alpha_guess;  // no-cancellation bound; often generous
        dimension = default_m_max(initial_level, aa) + 24;
        dimension = ((dimension + 31) / 32) * 32;  // round up; cheap insurance
        if (dimension > 4096) dimension = 4096;    // tail gate reports if truly short
    }

    double period = 2.0 * std::numbers::pi / std::fabs(scales.omega);
    double dt = period / static_cast<double>(settings.steps_per_period);
    return integrate_tdse(field, params, scales, dimension, initial_level, dt, settings);
}

std::vector<double> evolved_state::level_probabilities() const {
    std::vector<double> p(static_cast<std::size_t>(amplitudes.size()));
    for (Eigen::Index i = 0; i < amplitudes.size(); ++i)
        p[static_cast<std::size_t>(i)] = std::norm(amplitudes[i]);
    return p;
}

}  // namespace landau
