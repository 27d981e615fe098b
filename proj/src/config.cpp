#include "landau/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "landau/errors.hpp"
#include "landau/spectrum.hpp"

namespace landau {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string normalize_key(std::string_view key) {
  std::string out(trim(key));
  while (!out.empty() && out.front() == '-') out.erase(out.begin());
  for (char& c : out) {
    if (c == '-') c = '_';
  }
  return out;
}

double parse_double(std::string_view key, std::string_view text) {
  const std::string s(trim(text));
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size() || !std::isfinite(v)) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid number for '" + std::string(key) + "': '" + s + "'");
  }
}

int parse_int(std::string_view key, std::string_view text) {
  const std::string_view s = trim(text);
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ConfigError("invalid integer for '" + std::string(key) + "': '" + std::string(s) + "'");
  }
  return v;
}

bool parse_bool(std::string_view key, std::string_view text) {
  const std::string_view s = trim(text);
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw ConfigError("invalid boolean for '" + std::string(key) + "': '" + std::string(s) + "'");
}

std::string_view bands_name(BandContent b) {
  switch (b) {
    case BandContent::positive: return "pos";
    case BandContent::negative: return "neg";
    case BandContent::both: return "both";
  }
  return "?";
}

}  // namespace

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drops the sign of -0
  std::ostringstream os;
  os << std::setprecision(17) << value;
  return os.str();
}

FieldParams RunConfig::field() const { return {B, fermi_velocity, mev_to_joule(gap_mev)}; }

BroadeningModel RunConfig::broadening() const { return {mev_to_joule(gamma_mev)}; }

TimeGrid RunConfig::grid() const { return {fs_to_s(t_start_fs), fs_to_s(t_end_fs), samples}; }

void RunConfig::validate() const {
  try {
    field().validate();
    packet.validate();
    broadening().validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (samples < 2) throw ConfigError("samples must be >= 2");
  if (t_start_fs < 0.0) throw ConfigError("t_start_fs must be >= 0");
  if (t_end_fs > 0.0 && !(t_end_fs > t_start_fs)) throw ConfigError("t_end_fs must exceed t_start_fs");
  if (scan.steps < 1) throw ConfigError("gamma_steps must be >= 1");
  if (scan.from_mev < 0.0 || scan.to_mev < scan.from_mev) {
    throw ConfigError("gamma scan range needs 0 <= gamma_from_mev <= gamma_to_mev");
  }
}

void apply_setting(RunConfig& c, std::string_view raw_key, std::string_view value) {
  const std::string key = normalize_key(raw_key);
  const std::string_view v = trim(value);
  if (key == "B") c.B = parse_double(key, v);
  else if (key == "vf") c.fermi_velocity = parse_double(key, v);
  else if (key == "gap_mev") c.gap_mev = parse_double(key, v);
  else if (key == "n0") c.packet.n0 = parse_int(key, v);
  else if (key == "sigma") c.packet.sigma = parse_double(key, v);
  else if (key == "tail_tolerance") c.packet.tail_tolerance = parse_double(key, v);
  else if (key == "k0x") c.packet.k0x = parse_double(key, v);
  else if (key == "dk") c.packet.dk = parse_double(key, v);
  else if (key == "bands") {
    if (v == "pos") c.packet.bands = BandContent::positive;
    else if (v == "neg") c.packet.bands = BandContent::negative;
    else if (v == "both") c.packet.bands = BandContent::both;
    else throw ConfigError("bands must be pos, neg or both (got '" + std::string(v) + "')");
  } else if (key == "t_start_fs") c.t_start_fs = parse_double(key, v);
  else if (key == "t_end_fs") c.t_end_fs = parse_double(key, v);
  else if (key == "samples") c.samples = parse_int(key, v);
  else if (key == "gamma_mev") c.gamma_mev = parse_double(key, v);
  else if (key == "valleys") {
    if (v == "k1") c.valleys = Valleys::k1;
    else if (v == "both") c.valleys = Valleys::both;
    else throw ConfigError("valleys must be k1 or both (got '" + std::string(v) + "')");
  } else if (key == "format") {
    if (v == "csv") c.format = OutputFormat::csv;
    else if (v == "json") c.format = OutputFormat::json;
    else throw ConfigError("format must be csv or json (got '" + std::string(v) + "')");
  } else if (key == "si_currents") c.si_currents = parse_bool(key, v);
  else if (key == "damp_autocorr") c.damp_autocorr = parse_bool(key, v);
  else if (key == "per_term_broadening") c.per_term_broadening = parse_bool(key, v);
  else if (key == "gamma_from_mev") c.scan.from_mev = parse_double(key, v);
  else if (key == "gamma_to_mev") c.scan.to_mev = parse_double(key, v);
  else if (key == "gamma_steps") c.scan.steps = parse_int(key, v);
  else throw ConfigError("unknown setting '" + std::string(raw_key) + "'");
}

RunConfig parse_config(std::string_view text, RunConfig base) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key=value");
    }
    apply_setting(base, line.substr(0, eq), line.substr(eq + 1));
  }
  return base;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), std::move(base));
}

RunConfig resolve_defaults(RunConfig config) {
  config.validate();
  if (config.t_end_fs <= 0.0) {
    const SpectrumModel model(config.field());
    config.t_end_fs = s_to_fs(1.1 * timescales(model, config.packet.n0).revival);
    if (!(config.t_end_fs > config.t_start_fs)) throw ConfigError("t_end_fs must exceed t_start_fs");
  }
  return config;
}

std::vector<std::pair<std::string, std::string>> config_entries(const RunConfig& c) {
  auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  return {
      {"B", format_number(c.B)},
      {"vf", format_number(c.fermi_velocity)},
      {"gap_mev", format_number(c.gap_mev)},
      {"n0", std::to_string(c.packet.n0)},
      {"sigma", format_number(c.packet.sigma)},
      {"bands", std::string(bands_name(c.packet.bands))},
      {"tail_tolerance", format_number(c.packet.tail_tolerance)},
      {"k0x", format_number(c.packet.k0x)},
      {"dk", format_number(c.packet.dk)},
      {"t_start_fs", format_number(c.t_start_fs)},
      {"t_end_fs", format_number(c.t_end_fs)},
      {"samples", std::to_string(c.samples)},
      {"gamma_mev", format_number(c.gamma_mev)},
      {"valleys", c.valleys == Valleys::k1 ? "k1" : "both"},
      {"format", c.format == OutputFormat::csv ? "csv" : "json"},
      {"si_currents", b(c.si_currents)},
      {"damp_autocorr", b(c.damp_autocorr)},
      {"per_term_broadening", b(c.per_term_broadening)},
      {"gamma_from_mev", format_number(c.scan.from_mev)},
      {"gamma_to_mev", format_number(c.scan.to_mev)},
      {"gamma_steps", std::to_string(c.scan.steps)},
  };
}

std::string config_echo(const RunConfig& config) {
  std::string out;
  for (const auto& [k, v] : config_entries(config)) out += k + "=" + v + "\n";
  return out;
}

}  // namespace landau
