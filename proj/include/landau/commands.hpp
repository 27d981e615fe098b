#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "landau/config.hpp"

namespace landau {

struct TimescaleSummary {
  double t_classical_fs;
  double t_revival_ps;
  double t_zitterbewegung_fs;
  double t_zitterbewegung_gap_fs;
  double ratio_revival_classical;  // 4 n0
  double ratio_classical_zb;       // 4 n0
  double ratio_revival_zb;         // 16 n0^2
  double hbar_omega_mev;
  double magnetic_length_nm;
};

TimescaleSummary summarize_timescales(const RunConfig& config);

// Each command validates the configuration (ConfigError), resolves automatic
// settings, and writes a '#'-commented CSV or a JSON document to `out`.
void cmd_timescales(const RunConfig& config, std::ostream& out);
void cmd_autocorr(const RunConfig& config, std::ostream& out);
void cmd_current(const RunConfig& config, std::ostream& out);
void cmd_gamma_scan(const RunConfig& config, std::ostream& out);

/// Recovers the key=value block echoed in a CSV header; feeding it to
/// parse_config reproduces the run.
std::string extract_config_echo(std::string_view csv_output);

}  // namespace landau
