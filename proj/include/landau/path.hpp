#pragma once

#include <span>
#include <string>
#include <vector>

#include "landau/field.hpp"
#include "landau/physics.hpp"

namespace landau {

// A planar curve sampled in time.  Times strictly increasing.
struct planar_path {
    struct point {
        double t, p1, p2;
    };
    std::vector<point> points;

    static planar_path from_points(std::vector<point> pts);  // validates
};

// Signed area of the closed curve obtained by joining the last sample back to
// the first (shoelace).  A single point has zero area.
double closed_area(const planar_path& path);

// Guiding-center drift R(t) = (c/B) * integral_0^t (E2(s), -E1(s)) ds,
// accumulated on the supplied grid with panel quadrature split at field
// breakpoints, so R(0) = (0, 0) whenever 0 is on the grid.
struct drift_result {
    planar_path path;
    bool under_resolved = false;  // grid coarser than fastest primitive / 20
    std::string warning;
};
drift_result drift_path(const field_spec& field, const physical_params& params,
                        std::span<const double> grid);

// Phases attached to the closed drive and drift curves.  Both are pure phases:
// every transition probability is independent of them, which the tests pin down
// bit-for-bit.  beta comes from the real-space drift loop, gamma from the loop
// swept by the drive parameter (with its factor of four from the doubled area
// rate of the normal-ordering rearrangement).
struct geometric_phases {
    double beta = 0.0;
    double gamma = 0.0;
    double area_drift = 0.0;
    double area_drive = 0.0;
};
geometric_phases phases_from_paths(const planar_path& drift, const planar_path& drive,
                                   const physical_params& params);

}  // namespace landau
