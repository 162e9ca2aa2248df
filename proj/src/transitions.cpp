#include "landau/transitions.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "landau/errors.hpp"
#include "landau/laguerre.hpp"

namespace landau {

std::complex<double> displacement_argument(std::complex<double> u, const derived_scales& s) {
    return -std::conj(u) * s.k;
}

survival_result survival(int n, double x, double gamma) {
    if (n < 0) throw std::invalid_argument("survival: n must be >= 0");
    if (!std::isfinite(x) || x < 0.0)
        throw std::invalid_argument("survival: x must be finite and >= 0");
    double amp = laguerre_scaled(n, x);  // e^{-x/2} L_n(x)
    survival_result r;
    r.n = n;
    r.x = x;
    r.amplitude_modulus = std::fabs(amp);
    r.amplitude_sign = amp > 0.0 ? 1 : (amp < 0.0 ? -1 : 0);
    r.survival = amp * amp;
    r.transition = 1.0 - r.survival;
    r.gamma = gamma;
    return r;
}

double survival_fejer(int n, double x) {
    if (n < 0) throw std::invalid_argument("survival_fejer: n must be >= 0");
    if (!std::isfinite(x) || x <= 0.0)
        throw std::domain_error("survival_fejer: requires x > 0");
    double c = std::cos(2.0 * std::sqrt((n + 1.0) * x) - 0.25 * std::numbers::pi);
    return c * c / (std::numbers::pi * std::sqrt(x) * std::sqrt(n + 1.0));
}

std::complex<double> displacement_element(int m, int n, std::complex<double> alpha) {
    if (m < 0 || n < 0)
        throw std::invalid_argument("displacement_element: indices must be >= 0");
    if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()))
        throw std::invalid_argument("displacement_element: alpha must be finite");
    double aa = std::norm(alpha);
    if (aa == 0.0) return m == n ? 1.0 : 0.0;

    // <m|D|n> = sqrt(n!/m!) alpha^{m-n} e^{-|a|^2/2} L_n^{(m-n)}(|a|^2)   (m >= n)
    // and the m < n case by the same formula under (m,n,alpha) -> (n,m,-conj alpha)
    // with conjugation.  Magnitudes are assembled in log space: the factorial
    // ratio, the power, the gaussian and the polynomial rescale all live in one
    // exponent, so nothing overflows until the final (physically bounded) exp.
    int lo = std::min(m, n), d = std::abs(m - n);
    scaled_value poly = assoc_laguerre_mantexp(lo, d, aa);
    double log_mag = 0.5 * (std::lgamma(lo + 1.0) - std::lgamma(lo + d + 1.0)) +
                     0.5 * d * std::log(aa) - 0.5 * aa + poly.log_scale;
    std::complex<double> base = (m >= n) ? alpha : -std::conj(alpha);
    double arg = d == 0 ? 0.0 : d * std::arg(base);
    return poly.mantissa * std::exp(log_mag) * std::polar(1.0, arg);
}

int default_m_max(int n, double aa) {
    double est = n + aa + 10.0 * std::sqrt(aa + n + 1.0) + 20.0;
    return static_cast<int>(std::ceil(est));
}

transition_table transition_matrix(int n_source, std::complex<double> alpha,
                                   const transition_settings& settings) {
    if (n_source < 0) throw std::invalid_argument("transition_matrix: n_source must be >= 0");
    if (settings.tail_tolerance <= 0.0)
        throw std::invalid_argument("transition_matrix: tail_tolerance must be positive");
    double aa = std::norm(alpha);

    transition_table t;
    t.n_source = n_source;
    t.alpha = alpha;
    int m_max = settings.m_max >= 0 ? settings.m_max : default_m_max(n_source, aa);
    if (m_max > settings.m_cap) m_max = settings.m_cap;

    double sum = 0.0;
    int m = 0;
    for (;;) {
        for (; m <= m_max; ++m) {
            double p = std::norm(displacement_element(m, n_source, alpha));
            t.probabilities.push_back(p);
            sum += p;
        }
        if (1.0 - sum <= settings.tail_tolerance) break;
        if (m_max >= settings.m_cap)
            throw truncation_error(
                "transition_matrix: tail mass " + std::to_string(1.0 - sum) +
                    " still above tolerance at the m_cap ceiling; the row does not fit",
                1.0 - sum);
        m_max = std::min(settings.m_cap, m_max + m_max / 2 + 32);
    }

    t.m_max = m_max;
    t.row_sum = sum;
    t.tail_mass = 1.0 - sum;
    t.diagonal = n_source <= m_max ? t.probabilities[n_source] : 0.0;
    for (int i = 0; i <= m_max; ++i) {
        if (i < n_source)
            t.down_mass += t.probabilities[i];
        else if (i > n_source)
            t.up_mass += t.probabilities[i];
    }
    return t;
}

std::vector<sweep_row> sweep_over_levels(double x, int n_min, int n_max) {
    if (n_min < 0 || n_max < n_min)
        throw std::invalid_argument("sweep_over_levels: need 0 <= n_min <= n_max");
    if (!std::isfinite(x) || x < 0.0)
        throw std::invalid_argument("sweep_over_levels: x must be finite and >= 0");
    std::vector<sweep_row> rows;
    rows.reserve(n_max - n_min + 1);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    // one forward pass of the scaled recurrence serves every level
    double s = std::exp(-0.5 * x);
    double lm1 = s, l = (1.0 - x) * s;
    for (int n = 0; n <= n_max; ++n) {
        double amp = (n == 0) ? lm1 : l;
        if (n >= 1) {
            double next = ((2.0 * n + 1.0 - x) * l - n * lm1) / (n + 1.0);
            lm1 = l;
            l = next;
        }
        if (n < n_min) continue;
        sweep_row r;
        r.index = n;
        r.survival = amp * amp;
        r.transition = 1.0 - r.survival;
        r.fejer_survival = x > 0.0 ? survival_fejer(n, x) : nan;
        r.fejer_transition = x > 0.0 ? 1.0 - r.fejer_survival : nan;
        rows.push_back(r);
    }
    return rows;
}

std::vector<sweep_row> sweep_over_intensity(int n, std::span<const double> x_values) {
    if (n < 0) throw std::invalid_argument("sweep_over_intensity: n must be >= 0");
    std::vector<sweep_row> rows;
    rows.reserve(x_values.size());
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (double x : x_values) {
        survival_result s = survival(n, x);
        sweep_row r;
        r.index = x;
        r.survival = s.survival;
        r.transition = s.transition;
        r.fejer_survival = x > 0.0 ? survival_fejer(n, x) : nan;
        r.fejer_transition = x > 0.0 ? 1.0 - r.fejer_survival : nan;
        rows.push_back(r);
    }
    return rows;
}

}  // namespace landau
