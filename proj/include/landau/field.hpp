#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace landau {

enum class field_component { E1, E2 };

// Tabulated field samples (t, E1, E2), strictly increasing in t.  Evaluation
// interpolates linearly and is zero outside the tabulated range.
struct sampled_field {
    struct row {
        double t, e1, e2;
    };
    std::vector<row> rows;

    static sampled_field from_rows(std::vector<row> rows);  // validates
    std::array<double, 2> eval(double t) const;
};

// Parses a CSV table with header "t,E1,E2"; throws parse_error with the
// offending line number on malformed input.
sampled_field load_sampled_field(const std::string& path);
sampled_field parse_sampled_field(const std::string& text, const std::string& origin);

struct constant_signal {
    field_component target = field_component::E1;
    double amplitude = 0.0;
};

struct sinusoid_signal {
    field_component target = field_component::E1;
    double amplitude = 0.0;
    double angular_frequency = 0.0;
    double phase = 0.0;
    // Optional sub-window; absent edges fall back to the field window.
    std::optional<double> from, to;
};

struct gaussian_pulse_signal {
    field_component target = field_component::E1;
    double amplitude = 0.0;
    double center = 0.0;
    double width = 1.0;  // gaussian sigma, > 0
    double carrier_angular_frequency = 0.0;
    double carrier_phase = 0.0;
};

struct square_pulse_signal {
    field_component target = field_component::E1;
    double amplitude = 0.0;
    double from = 0.0, to = 0.0;
};

// Piecewise-constant noise: cells of width sample_step starting at the window
// start, each holding an independent uniform draw from [-amplitude, amplitude].
// The draw sequence is fixed by the seed (see rng.hpp for the generator).
struct white_noise_signal {
    field_component target = field_component::E1;
    double amplitude = 0.0;
    double sample_step = 1.0;
    std::uint64_t seed = 1;
};

// Tabulated contribution to both components at once.
struct sampled_signal {
    sampled_field table;
    std::string origin;  // path the table came from, for serialization
};

using field_primitive = std::variant<constant_signal, sinusoid_signal, gaussian_pulse_signal,
                                     square_pulse_signal, white_noise_signal, sampled_signal>;

// A finite-duration planar field: a window [t_start, t_end] plus a sum of
// primitives.  Outside the window the field is exactly (0, 0).  Noise cells
// are drawn once at construction, so evaluation is deterministic.
class field_spec {
  public:
    field_spec(double t_start, double t_end, std::vector<field_primitive> primitives);

    double t_start() const { return t0_; }
    double t_end() const { return t1_; }
    double duration() const { return t1_ - t0_; }
    const std::vector<field_primitive>& primitives() const { return prims_; }

    std::array<double, 2> eval(double t) const;
    // E(t) = E1(t) + i E2(t).
    std::complex<double> eval_complex(double t) const {
        auto e = eval(t);
        return {e[0], e[1]};
    }

    // Times inside [t_start, t_end] where the field or a derivative jumps:
    // window edges, sub-window edges, noise cell edges, sample nodes.
    // Sorted, deduplicated.
    std::vector<double> breakpoints() const;

    // Shortest intrinsic timescale among the primitives (oscillation periods,
    // pulse widths, noise cells, sample spacing); +inf when there is none.
    double fastest_timescale() const;

    bool has_sampled() const;

    // Same primitives with every noise seed replaced (cells redrawn).
    field_spec with_noise_seed(std::uint64_t seed) const;

    // FNV-1a over a canonical serialization of window + primitives; stable
    // across runs, used to tag verification reports.
    std::uint64_t content_hash() const;

  private:
    double t0_, t1_;
    std::vector<field_primitive> prims_;
    // Pre-drawn noise cells and their edge times, parallel to prims_ (empty
    // unless white noise).  Lookups binary-search the stored edges: the same
    // doubles the breakpoint list hands out, so integrators that split at
    // breakpoints see bit-exact half-open cells [edge_j, edge_{j+1}).
    std::vector<std::vector<double>> noise_cells_;
    std::vector<std::vector<double>> noise_edges_;

    void validate_and_draw();
};

}  // namespace landau
