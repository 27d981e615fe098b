#include "landau/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include <Eigen/QR>

#include "landau/errors.hpp"

namespace landau {

namespace {

constexpr std::array<double, 4> kStationFractions{0.25, 0.5, 0.75, 1.0};

double max_abs_until(std::span<const double> times, std::span<const double> values, double t_stop) {
  double m = 0.0;
  for (std::size_t k = 0; k < values.size() && (k == 0 || times[k] <= t_stop); ++k) {
    m = std::max(m, std::abs(values[k]));
  }
  return m;
}

std::vector<double> series_times(const RealSeries& series) {
  std::vector<double> t(static_cast<std::size_t>(series.size()));
  for (Eigen::Index k = 0; k < series.size(); ++k) t[static_cast<std::size_t>(k)] = series.time(k);
  return t;
}

std::span<const double> series_values(const RealSeries& series) {
  return {series.values.data(), static_cast<std::size_t>(series.values.size())};
}

// |DFT| of y at a frequency given in cycles per sample.
double dft_magnitude(const std::vector<double>& y, double cycles_per_sample) {
  const std::complex<double> step = std::polar(1.0, -2.0 * std::numbers::pi * cycles_per_sample);
  std::complex<double> phasor = 1.0;
  std::complex<double> acc = 0.0;
  for (std::size_t k = 0; k < y.size(); ++k) {
    acc += y[k] * phasor;
    phasor *= step;
  }
  return std::abs(acc);
}

double spectral_period(std::span<const double> t, std::span<const double> v) {
  const std::size_t n = v.size();
  const double dt = (t.back() - t.front()) / static_cast<double>(n - 1);

  // Least-squares linear detrend, then a Hann taper.
  Eigen::MatrixX2d design(static_cast<Eigen::Index>(n), 2);
  Eigen::VectorXd rhs(static_cast<Eigen::Index>(n));
  for (std::size_t k = 0; k < n; ++k) {
    design(static_cast<Eigen::Index>(k), 0) = 1.0;
    design(static_cast<Eigen::Index>(k), 1) = static_cast<double>(k);
    rhs[static_cast<Eigen::Index>(k)] = v[k];
  }
  const Eigen::Vector2d fit = design.colPivHouseholderQr().solve(rhs);
  std::vector<double> y(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double hann = 0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * k / (n - 1)));
    y[k] = (v[k] - fit[0] - fit[1] * k) * hann;
  }

  std::size_t best_bin = 1;
  double best = -1.0;
  for (std::size_t j = 1; j <= n / 2; ++j) {
    const double m = dft_magnitude(y, static_cast<double>(j) / n);
    if (m > best) {
      best = m;
      best_bin = j;
    }
  }
  // Refine between the neighbouring bins.
  constexpr int refine_steps = 400;
  const double lo = std::max(0.5, best_bin - 1.0);
  const double hi = best_bin + 1.0;
  double best_f = static_cast<double>(best_bin);
  for (int i = 0; i <= refine_steps; ++i) {
    const double f = lo + (hi - lo) * i / refine_steps;
    const double m = dft_magnitude(y, f / n);
    if (m > best) {
      best = m;
      best_f = f;
    }
  }
  return n * dt / best_f;
}

std::size_t station_index(double fraction) {
  for (std::size_t i = 0; i < kStationFractions.size(); ++i) {
    if (std::abs(kStationFractions[i] - fraction) < 1e-12) return i;
  }
  throw DomainError("revival stations are T_R/4, T_R/2, 3T_R/4 and T_R");
}

}  // namespace

std::string_view to_string(RevivalClass c) {
  switch (c) {
    case RevivalClass::full: return "full";
    case RevivalClass::fractional: return "fractional";
    case RevivalClass::absent: return "absent";
  }
  return "?";
}

std::vector<Peak> find_peaks(std::span<const double> times, std::span<const double> values,
                             double min_prominence) {
  const std::size_t n = values.size();
  if (n < 3) throw AnalysisError("peak search needs at least three samples");
  if (times.size() != n) throw AnalysisError("times and values differ in length");

  std::vector<Peak> peaks;
  std::size_t i = 1;
  while (i + 1 < n) {
    if (!(values[i - 1] < values[i])) {
      ++i;
      continue;
    }
    std::size_t plateau_end = i;
    while (plateau_end + 1 < n && values[plateau_end + 1] == values[i]) ++plateau_end;
    if (plateau_end + 1 < n && values[plateau_end + 1] < values[i]) {
      const double top = values[i];
      double left_min = top;
      for (std::size_t k = i; k-- > 0;) {
        if (values[k] > top) break;
        left_min = std::min(left_min, values[k]);
      }
      double right_min = top;
      for (std::size_t k = plateau_end + 1; k < n; ++k) {
        if (values[k] > top) break;
        right_min = std::min(right_min, values[k]);
      }
      const double prominence = top - std::max(left_min, right_min);
      if (prominence > min_prominence) {
        peaks.push_back({times[i], top, prominence, static_cast<Eigen::Index>(i)});
      }
    }
    i = plateau_end + 1;
  }
  return peaks;
}

std::vector<Peak> find_peaks(const RealSeries& series, double min_prominence) {
  const auto t = series_times(series);
  return find_peaks(t, series_values(series), min_prominence);
}

RevivalReport detect_revivals(const RealSeries& series, const TimeScales& scales,
                              const RevivalDetectionOptions& options) {
  const double revival = scales.revival;
  if (series.grid.t_end < 1.05 * revival * (1.0 - 1e-12)) {
    throw AnalysisError("series must extend to at least 1.05 T_R for revival detection");
  }
  const auto t = series_times(series);
  const auto raw = series_values(series);
  const double early_end = t.front() + scales.classical;

  std::vector<double> compensated(raw.begin(), raw.end());
  if (options.scale == DetectionScale::log && series.envelope_rate > 0.0) {
    for (std::size_t k = 0; k < compensated.size(); ++k) {
      const double v = raw[k];
      compensated[k] = v == 0.0 ? 0.0 : std::copysign(std::exp(std::log(std::abs(v)) + series.envelope_rate * t[k]), v);
    }
  }
  const double reference = max_abs_until(t, compensated, early_end);
  const double raw_reference = max_abs_until(t, raw, early_end);
  if (!(reference > 0.0)) throw AnalysisError("series has no early-time amplitude to compare against");

  const auto peaks = find_peaks(t, compensated, 0.0);

  RevivalReport report{revival, reference, {}};
  for (std::size_t s = 0; s < kStationFractions.size(); ++s) {
    RevivalStation& station = report.stations[s];
    station.fraction = kStationFractions[s];
    station.time = station.fraction * revival;
    const double lo = station.time * (1.0 - options.window);
    const double hi = station.time * (1.0 + options.window);
    for (const Peak& p : peaks) {
      if (p.time < lo || p.time > hi) continue;
      if (!station.peak || p.value > station.peak->value) station.peak = p;
    }
    if (!station.peak) continue;
    const Peak& p = *station.peak;
    if (options.scale == DetectionScale::log &&
        std::abs(raw[static_cast<std::size_t>(p.index)]) < options.log_floor * raw_reference) {
      continue;
    }
    if (p.value >= options.threshold * reference) {
      station.classification = RevivalClass::full;
    } else if (p.prominence >= options.fractional_prominence * reference) {
      station.classification = RevivalClass::fractional;
    }
  }
  return report;
}

double PeriodEstimate::disagreement() const { return std::abs(zero_crossing - spectral) / spectral; }

PeriodEstimate estimate_period(const RealSeries& series, TimeWindow window) {
  std::vector<double> t;
  std::vector<double> v;
  for (Eigen::Index k = 0; k < series.size(); ++k) {
    const double tk = series.time(k);
    if (tk >= window.begin && tk <= window.end) {
      t.push_back(tk);
      v.push_back(series.values[k]);
    }
  }
  if (v.size() < 3) throw AnalysisError("period window holds fewer than three samples");

  std::vector<double> crossings;
  for (std::size_t k = 0; k + 1 < v.size(); ++k) {
    if (v[k] == 0.0) {
      if (k == 0 || v[k - 1] != 0.0) crossings.push_back(t[k]);
    } else if ((v[k] < 0.0) != (v[k + 1] < 0.0) && v[k + 1] != 0.0) {
      crossings.push_back(t[k] - v[k] * (t[k + 1] - t[k]) / (v[k + 1] - v[k]));
    }
  }
  if (crossings.size() < 3) throw AnalysisError("period window holds fewer than three zero crossings");

  PeriodEstimate out{};
  out.zero_crossing = 2.0 * (crossings.back() - crossings.front()) / static_cast<double>(crossings.size() - 1);
  out.spectral = spectral_period(t, v);
  return out;
}

double measure_period(const RealSeries& series, TimeWindow window, double agreement) {
  const PeriodEstimate est = estimate_period(series, window);
  if (est.disagreement() > agreement) {
    throw AnalysisError("zero-crossing and spectral period estimates disagree by " +
                        std::to_string(100.0 * est.disagreement()) + "%");
  }
  return est.zero_crossing;
}

VisibilityCriterion early_log_persistence(double max_efolds, int samples) {
  VisibilityCriterion c;
  c.name = "early-log-persistence(efolds=" + std::to_string(max_efolds) + ")";
  c.grid = [samples](const TimeScales& s) { return TimeGrid{0.0, 2.5 * s.classical, samples}; };
  c.visible = [max_efolds](const RealSeries& jy, const TimeScales& s) {
    RealSeries magnitude = jy;
    magnitude.values = jy.values.cwiseAbs();
    const auto peaks = find_peaks(magnitude, 0.0);
    if (peaks.empty() || !(peaks.front().value > 0.0)) return false;
    const Peak& first = peaks.front();
    const double target = first.time + s.classical;
    const Peak* later = nullptr;
    for (const Peak& p : peaks) {
      if (p.time <= first.time + 0.5 * s.classical) continue;
      if (!later || std::abs(p.time - target) < std::abs(later->time - target)) later = &p;
    }
    if (!later || !(later->value > 0.0)) return false;
    return std::log(later->value / first.value) >= -max_efolds;
  };
  return c;
}

VisibilityCriterion log_station_visibility(double fraction, double log_floor, int samples) {
  const std::size_t index = station_index(fraction);
  VisibilityCriterion c;
  c.name = "log-station(fraction=" + std::to_string(fraction) + ", floor=" + std::to_string(log_floor) + ")";
  c.grid = [samples](const TimeScales& s) { return TimeGrid{0.0, 1.1 * s.revival, samples}; };
  c.visible = [index, log_floor](const RealSeries& jy, const TimeScales& s) {
    RevivalDetectionOptions opts;
    opts.scale = DetectionScale::log;
    opts.log_floor = log_floor;
    return detect_revivals(jy, s, opts).stations[index].classification != RevivalClass::absent;
  };
  return c;
}

GammaMaxEstimate estimate_gamma_max(const PacketSpec& packet, const FieldParams& field,
                                    const VisibilityCriterion& criterion, const GammaMaxOptions& options) {
  packet.validate();
  field.validate();
  if (packet.bands == BandContent::both) {
    throw AnalysisError("broadening estimate is defined on single-band currents");
  }
  if (!(options.tolerance > 0.0) || !(options.gamma_hi > 0.0)) {
    throw DomainError("gamma search needs a positive upper bound and tolerance");
  }
  const SpectrumModel model(field);
  const TimeScales scales = timescales(model, packet.n0);
  const WeightTable table = build_weights(packet);
  const Band s = packet.bands == BandContent::positive ? Band::positive : Band::negative;
  const RealSeries undamped = current_single_band(table, model, criterion.grid(scales), s).jy;

  GammaMaxEstimate out{0.0, 0.0, options.gamma_hi, 0};
  auto visible = [&](double gamma) {
    ++out.evaluations;
    return criterion.visible(with_broadening(undamped, BroadeningModel{gamma}), scales);
  };

  if (!visible(0.0)) throw AnalysisError("criterion '" + criterion.name + "' fails even without broadening");
  double lo = 0.0;
  double hi = options.gamma_hi;
  for (int doubling = 0; visible(hi); ++doubling) {
    if (doubling == 16) throw AnalysisError("criterion never fails; no finite broadening bound");
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > options.tolerance) {
    const double mid = 0.5 * (lo + hi);
    (visible(mid) ? lo : hi) = mid;
  }
  out.gamma = lo;
  out.bracket_lo = lo;
  out.bracket_hi = hi;
  return out;
}

}  // namespace landau
