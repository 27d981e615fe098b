#pragma once

#include <complex>
#include <span>

#include <Eigen/Core>

#include "landau/spectrum.hpp"
#include "landau/wavepacket.hpp"

namespace landau {

/// Uniform sampling of [t_start, t_end] with n_samples points (seconds).
struct TimeGrid {
  double t_start = 0.0;
  double t_end = 0.0;
  int n_samples = 4096;

  /// Throws DomainError unless t_end > t_start >= 0 and n_samples >= 2.
  void validate() const;
  double spacing() const { return (t_end - t_start) / (n_samples - 1); }
  double at(int k) const { return k == n_samples - 1 ? t_end : t_start + k * spacing(); }
  Eigen::VectorXd times() const;
};

enum class SeriesKind { autocorrelation, current_x, current_y };
enum class SeriesUnits { dimensionless, e_fermi_velocity };

/// Sampled observable. `envelope_rate` records a known exponential damping
/// exp(-rate * t) already folded into the values (zero when undamped).
template <typename Scalar>
struct ObservableSeries {
  TimeGrid grid;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> values;
  SeriesKind kind = SeriesKind::autocorrelation;
  SeriesUnits units = SeriesUnits::dimensionless;
  double envelope_rate = 0.0;

  Eigen::Index size() const { return values.size(); }
  double time(Eigen::Index k) const { return grid.at(static_cast<int>(k)); }
};

using ComplexSeries = ObservableSeries<std::complex<double>>;
using RealSeries = ObservableSeries<double>;

/// Level-independent broadening: E_n -> E_n + i gamma.
struct BroadeningModel {
  double gamma = 0.0;  // J

  void validate() const;
  /// Decay rate of a current term, (Gamma_n + Gamma_{n-1}) / hbar (1/s).
  double current_rate() const;
};

struct EvaluationOptions {
  /// Apply exp(-(Gamma_n + Gamma_{n-1}) t / hbar) inside every term instead of
  /// as one global envelope. Identical results for constant Gamma.
  bool per_term_broadening = false;
  /// Also damp A(t) by exp(-gamma t / hbar).
  bool damp_autocorrelation = false;
};

struct CurrentSeries {
  RealSeries jx;
  RealSeries jy;
};

struct CurrentValues {
  Eigen::VectorXd jx;
  Eigen::VectorXd jy;
};

/// A(t) = sum over populated (n, s) of U_{n,n} exp(-i E_{n,s} t / hbar).
ComplexSeries autocorrelation(const WeightTable& table, const SpectrumModel& model, const TimeGrid& grid,
                              const BroadeningModel& broadening = {}, const EvaluationOptions& options = {});

/// A(t) at arbitrary (possibly negative) times.
Eigen::VectorXcd autocorrelation_at(const WeightTable& table, const SpectrumModel& model,
                                    std::span<const double> times, const BroadeningModel& broadening = {},
                                    const EvaluationOptions& options = {});

/// Single-band currents in units of e v_F:
///   jx = s sum_{n>=1} U_{n-1,n} cos(w_n t) e^{-2 Gamma t / hbar}
///   jy =   sum_{n>=1} U_{n-1,n} sin(w_n t) e^{-2 Gamma t / hbar}
/// with w_n = (E_n - E_{n-1}) / hbar. The table must hold band s only.
CurrentSeries current_single_band(const WeightTable& table, const SpectrumModel& model, const TimeGrid& grid,
                                  Band s, const BroadeningModel& broadening = {},
                                  const EvaluationOptions& options = {});

CurrentValues current_single_band_at(const WeightTable& table, const SpectrumModel& model,
                                     std::span<const double> times, Band s,
                                     const BroadeningModel& broadening = {},
                                     const EvaluationOptions& options = {});

/// Two-band currents: jx is identically zero and
///   jy = sum_{n>=1} U_{n-1,n} [sin((E_n + E_{n-1}) t / hbar) + sin((E_n - E_{n-1}) t / hbar)]
/// times the broadening envelope. Prefactor one with half the population per band.
CurrentSeries current_two_band(const WeightTable& table, const SpectrumModel& model, const TimeGrid& grid,
                               const BroadeningModel& broadening = {}, const EvaluationOptions& options = {});

CurrentValues current_two_band_at(const WeightTable& table, const SpectrumModel& model,
                                  std::span<const double> times, const BroadeningModel& broadening = {},
                                  const EvaluationOptions& options = {});

/// Multiplies a current series by the broadening envelope exp(-2 gamma t / hbar).
/// For level-independent broadening this equals evaluating with `broadening`.
RealSeries with_broadening(const RealSeries& series, const BroadeningModel& broadening);

/// K1 + K2 current: the two valleys contribute equally.
RealSeries total_current_both_valleys(const RealSeries& per_valley);

/// |A(t)|^2 as a real series.
RealSeries squared_modulus(const ComplexSeries& series);

/// sum_{n>=1} U_{n-1,n}: the t = 0 value of a single-band jx (for s = +1)
/// and the bound on |jx|, |jy| without broadening.
double current_bound(const WeightTable& table);

}  // namespace landau
