#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "landau/observables.hpp"
#include "landau/units.hpp"
#include "landau/wavepacket.hpp"

namespace landau {

enum class Valleys { k1, both };
enum class OutputFormat { csv, json };

struct GammaScanRange {
  double from_mev = 0.0;
  double to_mev = 5.0;
  int steps = 11;
};

/// One simulation run. Physical inputs use the units of the command line
/// (T, m/s, meV, fs); conversion to SI happens in the accessors.
struct RunConfig {
  double B = 10.0;
  double fermi_velocity = Constants::fermi_velocity_default;
  double gap_mev = 0.0;
  PacketSpec packet;
  double t_start_fs = 0.0;
  double t_end_fs = 0.0;  // <= 0 selects 1.1 T_R
  int samples = 4096;
  double gamma_mev = 0.0;
  Valleys valleys = Valleys::k1;
  OutputFormat format = OutputFormat::csv;
  bool si_currents = false;
  bool damp_autocorr = false;
  bool per_term_broadening = false;
  GammaScanRange scan;

  FieldParams field() const;
  BroadeningModel broadening() const;
  /// Needs a resolved end time (see resolve_defaults).
  TimeGrid grid() const;

  /// Throws ConfigError describing the first invalid setting.
  void validate() const;
};

/// Sets one key. Keys match the long flag names with '-' or '_'.
/// Throws ConfigError for unknown keys or unparsable values.
void apply_setting(RunConfig& config, std::string_view key, std::string_view value);

/// key=value lines, '#' comments and blank lines ignored.
RunConfig parse_config(std::string_view text, RunConfig base = {});
RunConfig load_config_file(const std::string& path, RunConfig base = {});

/// Replaces automatic settings (t_end) with their concrete values.
RunConfig resolve_defaults(RunConfig config);

/// Every setting as ordered key/value text; parse_config of the joined
/// lines reproduces the configuration exactly.
std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& config);
std::string config_echo(const RunConfig& config);

/// 17 significant digits, no negative zero.
std::string format_number(double value);

}  // namespace landau
