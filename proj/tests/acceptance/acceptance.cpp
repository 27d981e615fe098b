// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance            run every criterion
//   acceptance --only N   run criterion N (exit status reflects it)

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "landau/analysis.hpp"
#include "landau/commands.hpp"
#include "landau/eigenstates.hpp"
#include "landau/errors.hpp"
#include "landau/observables.hpp"
#include "landau/spectrum.hpp"
#include "landau/wavepacket.hpp"

using namespace landau;

namespace {

constexpr double pi = std::numbers::pi;

// Collects sub-checks of one criterion.
struct Checks {
  bool ok = true;
  std::vector<std::string> failures;
  std::vector<std::string> notes;

  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      failures.push_back(what);
    }
  }
  void note(const std::string& text) { notes.push_back(text); }
};

std::string fmt(double v, int digits = 4) {
  std::ostringstream os;
  os.precision(digits);
  os << v;
  return os.str();
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

const SpectrumModel kModel{FieldParams{10.0}};

PacketSpec packet(int n0, double sigma, BandContent bands = BandContent::positive) {
  PacketSpec p;
  p.n0 = n0;
  p.sigma = sigma;
  p.bands = bands;
  return p;
}

void within(Checks& c, const std::string& name, double measured, double expected, double tol) {
  const double r = rel(measured, expected);
  c.note(name + "=" + fmt(measured) + " (" + fmt(100 * r, 2) + "%)");
  c.expect(r <= tol, name + " off by " + fmt(100 * r, 3) + "% from " + fmt(expected));
}

void criterion_1(Checks& c) {
  struct Row {
    int n0;
    double classical_fs, revival_ps, zb_fs;
  };
  for (const Row& row : {Row{15, 279.0, 17.0, 4.7}, Row{11, 239.0, 11.0, 5.4}}) {
    const auto s = timescales(kModel, row.n0);
    const std::string tag = "n0=" + std::to_string(row.n0) + " ";
    within(c, tag + "T_Cl[fs]", s.classical * 1e15, row.classical_fs, 0.02);
    within(c, tag + "T_R[ps]", s.revival * 1e12, row.revival_ps, 0.02);
    within(c, tag + "T_ZB[fs]", s.zitterbewegung * 1e15, row.zb_fs, 0.02);
  }
}

void criterion_2(Checks& c) {
  double worst = 0.0;
  for (int n0 : {1, 2, 5, 11, 15, 50}) {
    const auto s = timescales(kModel, n0);
    worst = std::max({worst, rel(s.classical / s.zitterbewegung, 4.0 * n0), rel(s.revival / s.classical, 4.0 * n0)});
  }
  const auto s15 = timescales(kModel, 15);
  const double r = s15.revival / s15.zitterbewegung;
  c.note("max rel error of 4n0 ratios " + fmt(worst, 3) + "; T_R/T_ZB(15)=" + fmt(r, 12));
  c.expect(worst <= 1e-12, "4 n0 ratio identity");
  c.expect(rel(r, 3600.0) <= 1e-12, "T_R/T_ZB = 3600 at n0 = 15");
}

void criterion_3(Checks& c) {
  {
    const auto scales = timescales(kModel, 15);
    const auto a2 = squared_modulus(
        autocorrelation(build_weights(packet(15, 3.0)), kModel, TimeGrid{0.0, 1.1 * scales.revival, 4096}));
    const auto report = detect_revivals(a2, scales);
    std::string classes;
    for (const auto& st : report.stations) {
      classes += std::string(to_string(st.classification)) + " ";
      c.expect(st.classification != RevivalClass::absent,
               "n0=15 station " + fmt(st.fraction) + " T_R absent");
    }
    const auto& last = report.stations[3];
    const double peak = last.peak ? last.peak->value : 0.0;
    c.note("n0=15 stations: " + classes + "|A|^2(T_R peak)=" + fmt(peak, 3));
    c.expect(peak >= 0.5, "|A|^2 peak at T_R below 0.5");
  }
  {
    const auto scales = timescales(kModel, 11);
    const auto a2 = squared_modulus(
        autocorrelation(build_weights(packet(11, 40.0)), kModel, TimeGrid{0.0, 1.1 * scales.revival, 4096}));
    const auto report = detect_revivals(a2, scales);
    int detected = 0;
    for (const auto& st : report.stations) detected += st.classification != RevivalClass::absent;
    c.note("n0=11 sigma=40 detected stations: " + std::to_string(detected));
    c.expect(detected == 0, "n0=11, sigma=40 shows revival stations");
  }
}

void criterion_4(Checks& c) {
  const auto table = build_weights(packet(15, 3.0));
  const auto scales = timescales(kModel, 15);
  const TimeGrid grid{0.0, 4.0 * scales.classical, 4096};
  const auto j = current_single_band(table, kModel, grid, Band::positive);
  const double measured = measure_period(j.jy, {grid.t_start, grid.t_end});
  within(c, "period(jy)[fs]", measured * 1e15, scales.classical * 1e15, 0.02);

  double bound = 0.0;
  const Eigen::VectorXd& off = table.off_diagonal();
  for (Eigen::Index i = 0; i < off.size(); ++i) bound += off[i];
  c.note("jy(0)=" + fmt(j.jy.values[0]) + " jx(0)=" + fmt(j.jx.values[0], 17) + " sum U=" + fmt(bound, 17));
  c.expect(j.jy.values[0] == 0.0, "jy(0) != 0");
  c.expect(j.jx.values[0] == bound, "jx(0) != sum U_{n-1,n}");
}

void criterion_5(Checks& c) {
  const auto table = build_weights(packet(15, 3.0, BandContent::both));
  const auto scales = timescales(kModel, 15);

  const TimeGrid early{0.0, 30e-15, 4096};
  const auto j = current_two_band(table, kModel, early);
  const double zb = measure_period(j.jy, {early.t_start, early.t_end});
  within(c, "early ZB period[fs]", zb * 1e15, scales.zitterbewegung * 1e15, 0.05);
  const double jx_max = j.jx.values.cwiseAbs().maxCoeff();
  c.note("max|jx|=" + fmt(jx_max));
  c.expect(jx_max <= 1e-15, "two-band jx not identically zero");

  const TimeGrid late{scales.revival - 15e-15, scales.revival + 15e-15, 4096};
  const auto jl = current_two_band(table, kModel, late);
  const double late_period = measure_period(jl.jy, {late.t_start, late.t_end});
  const double early_amp = j.jy.values.cwiseAbs().maxCoeff();
  const Eigen::VectorXd centered = jl.jy.values.array() - jl.jy.values.mean();
  const double late_amp = centered.cwiseAbs().maxCoeff();
  within(c, "ZB period near T_R[fs]", late_period * 1e15, scales.zitterbewegung * 1e15, 0.05);
  c.note("fast amplitude near T_R / early = " + fmt(late_amp / early_amp, 3));
  c.expect(late_amp >= 0.1 * early_amp, "ZB amplitude vanished near T_R");
}

// log-scale view of the first classical periods: oscillation peaks of |jy|
// are still resolved and stay above the floor.
bool early_log_structure(const RealSeries& jy, const TimeScales& s, std::string& detail) {
  RealSeries mag = jy;
  mag.values = jy.values.cwiseAbs();
  const auto peaks = find_peaks(mag, 0.0);
  std::vector<Peak> early;
  for (const auto& p : peaks) {
    if (p.time <= 2.5 * s.classical) early.push_back(p);
  }
  if (early.size() < 4) {
    detail = "only " + std::to_string(early.size()) + " early peaks";
    return false;
  }
  const double drop = early.back().value / early.front().value;
  detail = std::to_string(early.size()) + " early peaks, decay " + fmt(drop, 3);
  return drop >= 1e-12;
}

void criterion_6(Checks& c) {
  const auto table = build_weights(packet(15, 3.0));
  const auto scales = timescales(kModel, 15);
  const TimeGrid grid{0.0, 1.1 * scales.revival, 16384};
  const auto bare = current_single_band(table, kModel, grid, Band::positive).jy;

  RevivalDetectionOptions linear;
  RevivalDetectionOptions log_scale;
  log_scale.scale = DetectionScale::log;

  const auto weak = with_broadening(bare, BroadeningModel{mev_to_joule(0.7)});
  const auto weak_log = detect_revivals(weak, scales, log_scale);
  std::string weak_classes;
  int weak_detected = 0;
  for (const auto& st : weak_log.stations) {
    weak_classes += std::string(to_string(st.classification)) + " ";
    weak_detected += st.classification != RevivalClass::absent && st.fraction >= 0.5;
  }
  c.note("0.7 meV log stations: " + weak_classes);
  c.expect(weak_detected > 0, "no picosecond revival peak at 0.7 meV");

  const auto strong = with_broadening(bare, BroadeningModel{mev_to_joule(3.7)});
  const auto strong_lin = detect_revivals(strong, scales, linear);
  c.note("3.7 meV linear T_R: " + std::string(to_string(strong_lin.stations[3].classification)));
  c.expect(strong_lin.stations[3].classification == RevivalClass::absent, "linear T_R revival present at 3.7 meV");

  const TimeGrid early_grid{0.0, 2.5 * scales.classical, 4096};
  const auto early = with_broadening(current_single_band(table, kModel, early_grid, Band::positive).jy,
                                     BroadeningModel{mev_to_joule(3.7)});
  std::string detail;
  const bool survives = early_log_structure(early, scales, detail);
  c.note("3.7 meV early log structure: " + detail);
  c.expect(survives, "early log-scale structure lost at 3.7 meV");

  const auto est = estimate_gamma_max(packet(15, 3.0), FieldParams{10.0});
  const double gmax = joule_to_mev(est.gamma);
  c.note("gamma_max=" + fmt(gmax) + " meV [" + early_log_persistence().name + "]");
  c.expect(gmax >= 3.7 / 2 && gmax <= 3.7 * 2, "gamma_max outside factor 2 of 3.7 meV");
}

// Explicit Hermite polynomial coefficients by the integer recurrence.
double explicit_hermite_function(int n, double xi) {
  std::vector<std::vector<double>> h{{1.0}, {0.0, 2.0}};
  for (int k = 2; k <= n; ++k) {
    std::vector<double> next(static_cast<std::size_t>(k) + 1, 0.0);
    for (std::size_t i = 0; i < h[k - 1].size(); ++i) next[i + 1] += 2.0 * h[k - 1][i];
    for (std::size_t i = 0; i < h[k - 2].size(); ++i) next[i] -= 2.0 * (k - 1) * h[k - 2][i];
    h.push_back(next);
  }
  double poly = 0.0;
  const auto& coeffs = h[static_cast<std::size_t>(n)];
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) poly = poly * xi + *it;
  const double norm = std::sqrt(std::pow(2.0, n) * std::tgamma(n + 1.0) * std::sqrt(pi));
  return poly * std::exp(-xi * xi / 2) / norm;
}

void criterion_7(Checks& c) {
  // Weight normalization.
  double worst_norm = 0.0;
  for (int n0 : {1, 5, 15, 40, 200}) {
    for (double sigma : {0.5, 3.0, 40.0}) {
      for (auto bands : {BandContent::positive, BandContent::negative, BandContent::both}) {
        const auto t = build_weights(packet(n0, sigma, bands));
        worst_norm = std::max(worst_norm, std::abs(t.total_population() - 1.0));
      }
    }
  }
  c.note("max |sum U_nn - 1|=" + fmt(worst_norm, 3));
  c.expect(worst_norm <= 1e-12, "weight normalization");

  // |A(t)| <= 1.
  std::mt19937_64 rng(20261016);
  std::uniform_real_distribution<double> time(-50e-12, 50e-12);
  std::vector<double> times(20000);
  for (double& t : times) t = time(rng);
  double worst_a = 0.0;
  for (auto bands : {BandContent::positive, BandContent::both}) {
    const auto a = autocorrelation_at(build_weights(packet(15, 3.0, bands)), kModel, times);
    worst_a = std::max(worst_a, a.cwiseAbs().maxCoeff());
  }
  c.note("max|A|=" + fmt(worst_a, 17));
  c.expect(worst_a <= 1.0 + 1e-15, "|A(t)| exceeds 1");

  // Three-level brute force in long double.
  {
    Eigen::VectorXd amps(3);
    amps << 0.4, 1.0, 0.7;
    const auto table = WeightTable::from_amplitudes(3, amps, BandContent::positive);
    const long double z = 0.16L + 1.0L + 0.49L;
    const long double hbar = Constants::hbar;
    const std::vector<double> probe{0.0, 1e-15, 7.3e-15, 3.3e-14, 1.1e-13};
    const auto a = autocorrelation_at(table, kModel, probe);
    const auto j = current_single_band_at(table, kModel, probe, Band::positive);
    double worst = 0.0;
    for (std::size_t k = 0; k < probe.size(); ++k) {
      const long double t = probe[k];
      std::complex<long double> a_ref = 0.0L;
      long double jx_ref = 0.0L;
      long double jy_ref = 0.0L;
      for (int m = 0; m < 3; ++m) {
        const long double e = kModel.energy(3 + m, Band::positive);
        a_ref += static_cast<long double>(amps[m] * amps[m]) / z * std::polar(1.0L, -e * t / hbar);
        if (m > 0) {
          const long double w = (e - static_cast<long double>(kModel.energy(2 + m, Band::positive))) / hbar;
          const long double u = static_cast<long double>(amps[m - 1] * amps[m]) / z;
          jx_ref += u * std::cos(w * t);
          jy_ref += u * std::sin(w * t);
        }
      }
      const auto idx = static_cast<Eigen::Index>(k);
      worst = std::max({worst, std::abs(std::complex<double>(a_ref) - a[idx]),
                        std::abs(static_cast<double>(jx_ref) - j.jx[idx]),
                        std::abs(static_cast<double>(jy_ref) - j.jy[idx])});
    }
    c.note("3-level oracle max dev=" + fmt(worst, 3));
    c.expect(worst <= 1e-14, "3-level oracle");
  }

  // Hermite functions against explicit polynomials.
  {
    double worst = 0.0;
    for (int n = 0; n <= 12; ++n) {
      for (double xi = -6.0; xi <= 6.0; xi += 0.25) {
        const double ref = explicit_hermite_function(n, xi);
        worst = std::max(worst, std::abs(hermite_function(n, xi) - ref) / std::max(std::abs(ref), 1e-6));
      }
    }
    c.note("hermite vs polynomial=" + fmt(worst, 3));
    c.expect(worst <= 1e-10, "hermite explicit polynomials");
  }

  // Orthonormality by adaptive Gauss-Kronrod quadrature.
  {
    double worst = 0.0;
    for (int m = 0; m <= 12; ++m) {
      for (int n = m; n <= 12; ++n) {
        auto f = [m, n](double x) { return hermite_function(m, x) * hermite_function(n, x); };
        const double overlap =
            boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, -20.0, 20.0, 15, 1e-14);
        worst = std::max(worst, std::abs(overlap - (m == n ? 1.0 : 0.0)));
      }
    }
    c.note("orthonormality=" + fmt(worst, 3));
    c.expect(worst <= 1e-8, "orthonormality");
  }

  // B scaling.
  {
    double worst = 0.0;
    for (double b : {0.5, 1.0, 10.0, 30.0}) {
      const SpectrumModel lo{FieldParams{b}};
      const SpectrumModel hi{FieldParams{4 * b}};
      for (int n0 : {2, 15, 100}) {
        const auto s1 = timescales(lo, n0);
        const auto s4 = timescales(hi, n0);
        worst = std::max({worst, rel(s4.classical, s1.classical / 2), rel(s4.revival, s1.revival / 2),
                          rel(s4.zitterbewegung, s1.zitterbewegung / 2)});
      }
    }
    c.note("B scaling=" + fmt(worst, 3));
    c.expect(worst <= 1e-12, "T(4B) = T(B)/2");
  }

  // Revival peaks do not move when the grid is refined.
  {
    const auto scales = timescales(kModel, 15);
    const auto table = build_weights(packet(15, 3.0));
    const TimeGrid coarse{0.0, 1.1 * scales.revival, 4096};
    const TimeGrid fine{0.0, 1.1 * scales.revival, 2 * 4096 - 1};
    const auto rc = detect_revivals(squared_modulus(autocorrelation(table, kModel, coarse)), scales);
    const auto rf = detect_revivals(squared_modulus(autocorrelation(table, kModel, fine)), scales);
    double worst = 0.0;
    bool same = true;
    for (std::size_t i = 0; i < 4; ++i) {
      same = same && rc.stations[i].classification == rf.stations[i].classification;
      if (rc.stations[i].peak && rf.stations[i].peak) {
        worst = std::max(worst, std::abs(rc.stations[i].peak->time - rf.stations[i].peak->time) / coarse.spacing());
      }
    }
    c.note("grid doubling peak shift=" + fmt(worst, 3) + " spacings");
    c.expect(same, "grid doubling changes classifications");
    c.expect(worst <= 1.0, "grid doubling moves peaks");
  }
}

void criterion_8(Checks& c) {
  RunConfig base;
  base.samples = 2048;
  std::vector<std::pair<std::string, std::function<void(const RunConfig&, std::ostream&)>>> runs{
      {"timescales", cmd_timescales},
      {"autocorr", cmd_autocorr},
      {"current", cmd_current},
      {"gamma-scan", cmd_gamma_scan},
  };
  for (auto format : {OutputFormat::csv, OutputFormat::json}) {
    RunConfig config = base;
    config.format = format;
    for (const auto& [name, cmd] : runs) {
      std::ostringstream first;
      std::ostringstream second;
      cmd(config, first);
      cmd(config, second);
      c.expect(first.str() == second.str(), name + " output differs between runs");
    }
  }
  c.note("in-process CSV and JSON runs compared; the binary is compared by the cli_determinism test");
}

struct Criterion {
  int id;
  const char* title;
  void (*run)(Checks&);
};

constexpr Criterion kCriteria[] = {
    {1, "time scales at B = 10 T", criterion_1},
    {2, "ratio identities", criterion_2},
    {3, "revival structure", criterion_3},
    {4, "classical periodicity", criterion_4},
    {5, "zitterbewegung", criterion_5},
    {6, "broadening", criterion_6},
    {7, "property suites", criterion_7},
    {8, "determinism", criterion_8},
};

bool run_criterion(const Criterion& criterion) {
  Checks checks;
  const auto start = std::chrono::steady_clock::now();
  try {
    criterion.run(checks);
  } catch (const std::exception& e) {
    checks.expect(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::string line = std::string(checks.ok ? "[PASS]" : "[FAIL]") + " criterion " + std::to_string(criterion.id) +
                     ": " + criterion.title + " (" + fmt(seconds, 3) + " s)";
  for (const auto& n : checks.notes) line += "\n    " + n;
  for (const auto& f : checks.failures) line += "\n    failed: " + f;
  std::puts(line.c_str());
  return checks.ok;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--only N]\n", argv[0]);
      return 2;
    }
  }
  bool all = true;
  bool matched = false;
  for (const auto& criterion : kCriteria) {
    if (only != 0 && criterion.id != only) continue;
    matched = true;
    all = run_criterion(criterion) && all;
  }
  if (!matched) {
    std::fprintf(stderr, "no criterion %d\n", only);
    return 2;
  }
  return all ? 0 : 1;
}
