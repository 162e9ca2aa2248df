#pragma once

#include <ostream>
#include <span>
#include <string>

#include "landau/fourier.hpp"
#include "landau/path.hpp"
#include "landau/transitions.hpp"
#include "landau/verify.hpp"

namespace landau {

// %.12g everywhere: enough digits to plot and diff, short enough to read.
std::string format_number(double v);

void write_sweep_csv(std::ostream& os, const std::string& index_name,
                     std::span<const sweep_row> rows);
void write_path_csv(std::ostream& os, const planar_path& path);
void write_matrix_csv(std::ostream& os, const transition_table& table);
void write_spectrum_csv(std::ostream& os, std::span<const spectrum_point> points,
                        double omega_marked);

std::string drive_summary_json(const drive_parameter& drive, const geometric_phases& phases);
std::string matrix_json(const transition_table& table);
std::string verify_report_json(const verify_report& report);

}  // namespace landau
