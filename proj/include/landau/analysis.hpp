#pragma once

#include <array>
#include <functional>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "landau/observables.hpp"
#include "landau/spectrum.hpp"
#include "landau/units.hpp"
#include "landau/wavepacket.hpp"

namespace landau {

struct Peak {
  double time;
  double value;
  double prominence;
  Eigen::Index index;
};

/// Local maxima whose topographic prominence exceeds `min_prominence`, sorted
/// by time. A plateau counts once, at its leftmost sample. Endpoints are never
/// peaks. Throws AnalysisError for fewer than three samples.
std::vector<Peak> find_peaks(const RealSeries& series, double min_prominence);
std::vector<Peak> find_peaks(std::span<const double> times, std::span<const double> values,
                             double min_prominence);

enum class RevivalClass { full, fractional, absent };

std::string_view to_string(RevivalClass c);

struct RevivalStation {
  double fraction;  // of the revival time
  double time;
  std::optional<Peak> peak;
  RevivalClass classification = RevivalClass::absent;
};

struct RevivalReport {
  double predicted_revival;
  double reference;  // early-time amplitude the thresholds are relative to
  std::array<RevivalStation, 4> stations;  // T_R/4, T_R/2, 3T_R/4, T_R
};

enum class DetectionScale { linear, log };

struct RevivalDetectionOptions {
  /// Half-width of each station window, as a fraction of the station time.
  double window = 0.05;
  /// "full" needs a peak value >= threshold * reference.
  double threshold = 0.5;
  /// "fractional" needs a peak prominence >= fractional_prominence * reference.
  double fractional_prominence = 0.42;
  /// log: undo the series' recorded envelope before classifying, and require
  /// the damped peak to stay above log_floor * reference.
  DetectionScale scale = DetectionScale::linear;
  double log_floor = 1e-12;
};

/// Classifies the stations T_R/4, T_R/2, 3T_R/4 and T_R of a real series
/// (|A|^2 or a current component). The reference is max |value| over the
/// first classical period, so classifications are scale-invariant.
/// Throws AnalysisError if the series ends before 1.05 T_R.
RevivalReport detect_revivals(const RealSeries& series, const TimeScales& scales,
                              const RevivalDetectionOptions& options = {});

struct TimeWindow {
  double begin;
  double end;
};

struct PeriodEstimate {
  double zero_crossing;  // 2 x mean spacing of zero crossings
  double spectral;       // 1 / dominant frequency of the detrended window

  double disagreement() const;
};

/// Both period estimates over `window`. Throws AnalysisError with fewer than
/// three zero crossings in the window.
PeriodEstimate estimate_period(const RealSeries& series, TimeWindow window);

/// Zero-crossing period, checked against the spectral estimate. Throws
/// AnalysisError if they disagree by more than `agreement` (relative).
double measure_period(const RealSeries& series, TimeWindow window, double agreement = 0.05);

/// Predicate deciding whether revival behaviour is observable in a damped
/// single-band jy series. `grid` says which samples it needs.
struct VisibilityCriterion {
  std::string name;
  std::function<TimeGrid(const TimeScales&)> grid;
  std::function<bool(const RealSeries& jy, const TimeScales&)> visible;
};

/// Default criterion: on a log scale the classical oscillation of |jy| may
/// lose at most `max_efolds` e-folds over its first period. The default of pi
/// corresponds to 2 Gamma <= E'(n0) / 2 when the undamped decay is negligible.
VisibilityCriterion early_log_persistence(double max_efolds = std::numbers::pi, int samples = 4096);

/// Alternative: the station at `fraction` * T_R stays non-absent under
/// log-scale detection with the given floor.
VisibilityCriterion log_station_visibility(double fraction, double log_floor = 1e-12, int samples = 4096);

struct GammaMaxOptions {
  double gamma_hi = mev_to_joule(50.0);
  double tolerance = mev_to_joule(0.05);
};

struct GammaMaxEstimate {
  double gamma;       // largest Gamma known to pass (J)
  double bracket_lo;  // == gamma
  double bracket_hi;  // smallest Gamma known to fail (J)
  int evaluations;
};

/// Bisection for the largest level broadening at which `criterion` still holds
/// for the single-band current of `packet`. Throws AnalysisError if the
/// criterion fails without broadening or the packet is two-band.
GammaMaxEstimate estimate_gamma_max(const PacketSpec& packet, const FieldParams& field,
                                    const VisibilityCriterion& criterion = early_log_persistence(),
                                    const GammaMaxOptions& options = {});

}  // namespace landau
