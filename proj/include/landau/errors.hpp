#pragma once

#include <stdexcept>
#include <string>

namespace landau {

// Bad user input: config files, CLI values, malformed CSV tables.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// config_error carrying the offending line of a config or table file.
struct parse_error : config_error {
    int line;
    parse_error(const std::string& msg, int line_no)
        : config_error("line " + std::to_string(line_no) + ": " + msg), line(line_no) {}
};

// A computation that ran but cannot vouch for its result.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Probability mass escaped past the truncation boundary.
struct truncation_error : numeric_error {
    double tail;
    truncation_error(const std::string& msg, double tail_mass)
        : numeric_error(msg), tail(tail_mass) {}
};

// Integrator norm drift exceeded its gate; the step was too coarse.
struct step_size_error : numeric_error {
    double norm_drift;
    step_size_error(const std::string& msg, double drift)
        : numeric_error(msg), norm_drift(drift) {}
};

}  // namespace landau
