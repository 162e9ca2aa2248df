#pragma once

#include <complex>
#include <optional>

namespace landau {

// Gaussian-unit inputs. Defaults put everything at 1 so the cyclotron
// frequency, the magnetic length and the ladder coupling are all O(1).
struct physical_params {
    double q = 1.0;
    double m = 1.0;
    double B = 1.0;
    double c = 1.0;
    double hbar = 1.0;

    // Replaces the derived ladder coupling k when set (the coupling between
    // the drive and the ladder operators is convention-dependent; the default
    // below is one self-consistent choice).
    std::optional<double> k_override;

    void validate() const;  // throws std::invalid_argument
};

struct derived_scales {
    double omega;            // cyclotron frequency qB/(m c), signed with q
    double k;                // ladder coupling, default sqrt(2 m |omega| / hbar)
    double magnetic_length;  // sqrt(hbar c / (|q| B))
};

derived_scales derive_scales(const physical_params& p);

// x = |u k|^2, the single intensity parameter every probability depends on.
double intensity(std::complex<double> u, const derived_scales& s);

}  // namespace landau
