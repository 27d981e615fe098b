#include "landau/commands.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <variant>
#include <vector>

#include "landau/analysis.hpp"
#include "landau/errors.hpp"
#include "landau/observables.hpp"
#include "landau/spectrum.hpp"

namespace landau {

namespace {

using Cell = std::variant<double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> summary;
};

std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string csv_cell(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
  return std::get<std::string>(cell);
}

std::string json_cell(const Cell& cell) {
  if (const auto* d = std::get_if<double>(&cell)) return format_number(*d);
  return json_string(std::get<std::string>(cell));
}

void write_table(std::ostream& out, std::string_view command, const RunConfig& config, const Table& table) {
  if (config.format == OutputFormat::csv) {
    out << "# landau-sim " << command << "\n";
    for (const auto& [k, v] : config_entries(config)) out << "# " << k << "=" << v << "\n";
    for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "," : "") << table.columns[i];
    out << "\n";
    for (const auto& row : table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
      out << "\n";
    }
    for (const auto& [k, v] : table.summary) out << "# " << k << "=" << csv_cell(v) << "\n";
    return;
  }

  out << "{\n  \"command\": " << json_string(command) << ",\n  \"config\": {";
  const auto entries = config_entries(config);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out << (i ? ", " : "") << json_string(entries[i].first) << ": " << json_string(entries[i].second);
  }
  out << "},\n  \"columns\": [";
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? ", " : "") << json_string(table.columns[i]);
  out << "],\n  \"rows\": [";
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out << (r ? ",\n    [" : "\n    [");
    for (std::size_t i = 0; i < table.rows[r].size(); ++i) out << (i ? ", " : "") << json_cell(table.rows[r][i]);
    out << "]";
  }
  out << (table.rows.empty() ? "]" : "\n  ]") << ",\n  \"summary\": {";
  for (std::size_t i = 0; i < table.summary.size(); ++i) {
    out << (i ? ", " : "") << json_string(table.summary[i].first) << ": " << json_cell(table.summary[i].second);
  }
  out << "}\n}\n";
}

Band single_band(const RunConfig& config) {
  switch (config.packet.bands) {
    case BandContent::positive: return Band::positive;
    case BandContent::negative: return Band::negative;
    case BandContent::both: break;
  }
  throw ConfigError("this command needs a single-band packet (bands=pos or bands=neg)");
}

EvaluationOptions evaluation_options(const RunConfig& config) {
  return {config.per_term_broadening, config.damp_autocorr};
}

std::string gamma_label(double efolds) { return "gamma_max_mev[efolds=" + format_number(efolds) + "]"; }

}  // namespace

TimescaleSummary summarize_timescales(const RunConfig& config) {
  config.validate();
  const SpectrumModel model(config.field());
  const int n0 = config.packet.n0;
  const TimeScales ts = timescales(model, n0);
  return {s_to_fs(ts.classical),
          ts.revival * 1e12,
          s_to_fs(ts.zitterbewegung),
          s_to_fs(zb_period_with_gap(model, n0)),
          ts.revival / ts.classical,
          ts.classical / ts.zitterbewegung,
          ts.revival / ts.zitterbewegung,
          joule_to_mev(model.level_quantum()),
          magnetic_length(config.field()) * 1e9};
}

void cmd_timescales(const RunConfig& raw, std::ostream& out) {
  const RunConfig config = resolve_defaults(raw);
  const TimescaleSummary s = summarize_timescales(config);
  const double n0 = config.packet.n0;
  Table t;
  t.columns = {"quantity", "value", "unit"};
  auto row = [&t](const char* name, double v, const char* unit) { t.rows.push_back({name, v, unit}); };
  row("t_classical", s.t_classical_fs, "fs");
  row("t_revival", s.t_revival_ps, "ps");
  row("t_zitterbewegung", s.t_zitterbewegung_fs, "fs");
  row("t_zitterbewegung_gap", s.t_zitterbewegung_gap_fs, "fs");
  row("ratio_revival_classical", s.ratio_revival_classical, "1");
  row("ratio_classical_zitterbewegung", s.ratio_classical_zb, "1");
  row("ratio_revival_zitterbewegung", s.ratio_revival_zb, "1");
  row("four_n0", 4.0 * n0, "1");
  row("sixteen_n0_squared", 16.0 * n0 * n0, "1");
  row("hbar_omega", s.hbar_omega_mev, "meV");
  row("magnetic_length", s.magnetic_length_nm, "nm");
  write_table(out, "timescales", config, t);
}

void cmd_autocorr(const RunConfig& raw, std::ostream& out) {
  const RunConfig config = resolve_defaults(raw);
  const SpectrumModel model(config.field());
  const WeightTable table = build_weights(config.packet);
  const ComplexSeries a =
      autocorrelation(table, model, config.grid(), config.broadening(), evaluation_options(config));
  Table t;
  t.columns = {"t_fs", "re_A", "im_A", "abs2_A"};
  t.rows.reserve(static_cast<std::size_t>(a.size()));
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    const auto v = a.values[k];
    t.rows.push_back({s_to_fs(a.time(k)), v.real(), v.imag(), std::norm(v)});
  }
  write_table(out, "autocorr", config, t);
}

void cmd_current(const RunConfig& raw, std::ostream& out) {
  const RunConfig config = resolve_defaults(raw);
  const SpectrumModel model(config.field());
  const WeightTable table = build_weights(config.packet);
  const auto opts = evaluation_options(config);
  CurrentSeries j = config.packet.bands == BandContent::both
                        ? current_two_band(table, model, config.grid(), config.broadening(), opts)
                        : current_single_band(table, model, config.grid(), single_band(config),
                                              config.broadening(), opts);
  if (config.valleys == Valleys::both) {
    j.jx = total_current_both_valleys(j.jx);
    j.jy = total_current_both_valleys(j.jy);
  }
  const double scale = config.si_currents ? Constants::e_charge * config.fermi_velocity : 1.0;
  Table t;
  t.columns = config.si_currents ? std::vector<std::string>{"t_fs", "jx_A_m", "jy_A_m"}
                                 : std::vector<std::string>{"t_fs", "jx_evf", "jy_evf"};
  t.rows.reserve(static_cast<std::size_t>(j.jy.size()));
  for (Eigen::Index k = 0; k < j.jy.size(); ++k) {
    t.rows.push_back({s_to_fs(j.jy.time(k)), scale * j.jx.values[k], scale * j.jy.values[k]});
  }
  write_table(out, "current", config, t);
}

void cmd_gamma_scan(const RunConfig& raw, std::ostream& out) {
  const RunConfig config = resolve_defaults(raw);
  const Band s = single_band(config);
  const SpectrumModel model(config.field());
  const TimeScales scales = timescales(model, config.packet.n0);
  const WeightTable table = build_weights(config.packet);
  const RealSeries undamped = current_single_band(table, model, config.grid(), s).jy;

  RevivalDetectionOptions linear;
  RevivalDetectionOptions log_scale;
  log_scale.scale = DetectionScale::log;

  Table t;
  t.columns = {"gamma_mev"};
  for (const char* prefix : {"lin_", "log_", "peak_"}) {
    for (const char* station : {"q1", "q2", "q3", "q4"}) t.columns.push_back(std::string(prefix) + station);
  }
  const int steps = config.scan.from_mev == config.scan.to_mev ? 1 : config.scan.steps;
  for (int i = 0; i < steps; ++i) {
    const double gamma_mev =
        steps == 1 ? config.scan.from_mev
                   : config.scan.from_mev + (config.scan.to_mev - config.scan.from_mev) * i / (steps - 1);
    const RealSeries jy = with_broadening(undamped, BroadeningModel{mev_to_joule(gamma_mev)});
    const RevivalReport lin = detect_revivals(jy, scales, linear);
    const RevivalReport log = detect_revivals(jy, scales, log_scale);
    std::vector<Cell> row{gamma_mev};
    for (const auto& st : lin.stations) row.emplace_back(std::string(to_string(st.classification)));
    for (const auto& st : log.stations) row.emplace_back(std::string(to_string(st.classification)));
    for (const auto& st : lin.stations) row.emplace_back(st.peak ? st.peak->value / lin.reference : 0.0);
    t.rows.push_back(std::move(row));
  }

  const GammaMaxEstimate best = estimate_gamma_max(config.packet, config.field());
  t.summary.emplace_back("criterion", early_log_persistence().name);
  t.summary.emplace_back("gamma_max_bracket_lo_mev", joule_to_mev(best.bracket_lo));
  t.summary.emplace_back("gamma_max_bracket_hi_mev", joule_to_mev(best.bracket_hi));
  for (double efolds : {std::numbers::pi / 2.0, 2.0 * std::numbers::pi}) {
    const auto alt = estimate_gamma_max(config.packet, config.field(), early_log_persistence(efolds));
    t.summary.emplace_back(gamma_label(efolds), joule_to_mev(alt.gamma));
  }
  t.summary.emplace_back("gamma_max_mev", joule_to_mev(best.gamma));
  write_table(out, "gamma-scan", config, t);
}

std::string extract_config_echo(std::string_view csv) {
  std::string echo;
  bool in_header = false;
  while (!csv.empty()) {
    const auto nl = csv.find('\n');
    const std::string_view line = csv.substr(0, nl);
    csv = nl == std::string_view::npos ? std::string_view{} : csv.substr(nl + 1);
    if (line.rfind("# landau-sim ", 0) == 0) {
      in_header = true;
      continue;
    }
    if (!in_header) continue;
    if (line.rfind("# ", 0) != 0) break;
    echo.append(line.substr(2));
    echo += '\n';
  }
  return echo;
}

}  // namespace landau
