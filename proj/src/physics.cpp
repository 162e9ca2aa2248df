#include "landau/physics.hpp"

#include <cmath>
#include <stdexcept>

namespace landau {

void physical_params::validate() const {
    auto bad = [](const char* what) { throw std::invalid_argument(what); };
    if (!std::isfinite(q) || !std::isfinite(m) || !std::isfinite(B) ||
        !std::isfinite(c) || !std::isfinite(hbar))
        bad("physical parameters must be finite");
    if (q == 0.0) bad("charge q must be nonzero (no cyclotron motion otherwise)");
    if (m <= 0.0) bad("mass m must be positive");
    if (B <= 0.0) bad("field strength B must be positive");
    if (c <= 0.0) bad("speed of light c must be positive");
    if (hbar <= 0.0) bad("hbar must be positive");
    if (k_override && (!std::isfinite(*k_override) || *k_override <= 0.0))
        bad("k override must be positive and finite");
}

derived_scales derive_scales(const physical_params& p) {
    p.validate();
    derived_scales s;
    s.omega = p.q * p.B / (p.m * p.c);
    s.k = p.k_override ? *p.k_override : std::sqrt(2.0 * p.m * std::abs(s.omega) / p.hbar);
    s.magnetic_length = std::sqrt(p.hbar * p.c / (std::abs(p.q) * p.B));
    return s;
}

double intensity(std::complex<double> u, const derived_scales& s) {
    return std::norm(u) * s.k * s.k;
}

}  // namespace landau
