// landau-sim: wave-packet revivals, cyclotron currents and zitterbewegung of
// Landau-level electrons in graphene.

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "landau/commands.hpp"
#include "landau/config.hpp"
#include "landau/errors.hpp"

namespace {

constexpr int kConfigError = 1;
constexpr int kRuntimeError = 2;

struct Overrides {
  std::string config_file;
  std::string out_file;
  // Flags win over the config file, so they are applied last.
  std::vector<std::pair<std::string, std::string>> settings;
};

void add_run_options(CLI::App& cmd, Overrides& o) {
  cmd.add_option("--config", o.config_file, "key=value configuration file");
  cmd.add_option("--out", o.out_file, "output file (default: stdout)");
  const std::vector<std::pair<std::string, std::string>> flags{
      {"--B", "magnetic field (T)"},
      {"--vf", "Fermi velocity (m/s)"},
      {"--n0", "central Landau level"},
      {"--sigma", "Gaussian width parameter in level space"},
      {"--bands", "populated bands: pos, neg or both"},
      {"--tail-tolerance", "excluded Gaussian weight"},
      {"--gamma-mev", "Landau-level broadening (meV)"},
      {"--gap-mev", "energy gap (meV)"},
      {"--t-start-fs", "first sample time (fs)"},
      {"--t-end-fs", "last sample time (fs); 0 selects 1.1 T_R"},
      {"--samples", "number of time samples"},
      {"--valleys", "k1 or both"},
      {"--format", "csv or json"},
      {"--gamma-from-mev", "gamma-scan start (meV)"},
      {"--gamma-to-mev", "gamma-scan end (meV)"},
      {"--gamma-steps", "gamma-scan row count"},
  };
  for (const auto& [flag, help] : flags) {
    cmd.add_option_function<std::string>(
        flag, [&o, key = flag](const std::string& v) { o.settings.emplace_back(key, v); }, help);
  }
  for (const auto& [flag, help] : std::vector<std::pair<std::string, std::string>>{
           {"--si-currents", "report currents multiplied by e v_F (A m)"},
           {"--damp-autocorr", "apply the broadening envelope to A(t) as well"},
           {"--per-term-broadening", "apply broadening inside each series term"}}) {
    cmd.add_flag_callback(flag, [&o, key = flag] { o.settings.emplace_back(key, "true"); }, help);
  }
}

landau::RunConfig build_config(const Overrides& o) {
  landau::RunConfig config;
  if (!o.config_file.empty()) config = landau::load_config_file(o.config_file);
  for (const auto& [key, value] : o.settings) landau::apply_setting(config, key, value);
  config.validate();
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau-level wave-packet dynamics in graphene"};
  app.require_subcommand(1);

  using Command = std::function<void(const landau::RunConfig&, std::ostream&)>;
  const std::map<std::string, std::pair<std::string, Command>> commands{
      {"timescales", {"classical, revival and zitterbewegung periods", landau::cmd_timescales}},
      {"autocorr", {"autocorrelation A(t) time series", landau::cmd_autocorr}},
      {"current", {"electric current jx(t), jy(t) time series", landau::cmd_current}},
      {"gamma-scan", {"revival visibility versus level broadening", landau::cmd_gamma_scan}},
  };

  Overrides overrides;
  std::map<std::string, CLI::App*> subcommands;
  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    add_run_options(*sub, overrides);
    subcommands[name] = sub;
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  try {
    const landau::RunConfig config = build_config(overrides);
    for (const auto& [name, sub] : subcommands) {
      if (!sub->parsed()) continue;
      const Command& run = commands.at(name).second;
      if (overrides.out_file.empty()) {
        run(config, std::cout);
      } else {
        std::ofstream file(overrides.out_file, std::ios::binary);
        if (!file) throw landau::Error("cannot open output file '" + overrides.out_file + "'");
        run(config, file);
        file.flush();
        if (!file) throw landau::Error("failed writing '" + overrides.out_file + "'");
      }
    }
  } catch (const landau::ConfigError& e) {
    std::cerr << "landau-sim: configuration error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "landau-sim: " << e.what() << "\n";
    return kRuntimeError;
  }
  return 0;
}
