#include "landau/observables.hpp"

#include <cmath>
#include <vector>

#include "landau/errors.hpp"
#include "parallel.hpp"

namespace landau {

namespace {

// E_n / hbar for n = n_min..n_max (rad/s).
Eigen::VectorXd level_frequencies(const WeightTable& table, const SpectrumModel& model) {
  Eigen::VectorXd w(table.diagonal().size());
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    w[i] = model.energy(table.n_min() + static_cast<int>(i)) / Constants::hbar;
  }
  return w;
}

void require_single_band(const WeightTable& table, Band s) {
  const BandContent expected = s == Band::positive ? BandContent::positive : BandContent::negative;
  if (table.band_content() != expected) {
    throw WeightTableError("single-band currents need a table populated in band s = " +
                           std::to_string(sign(s)) + " only");
  }
}

void require_two_band(const WeightTable& table) {
  if (table.band_content() != BandContent::both) {
    throw WeightTableError("two-band currents need a table populated in both bands");
  }
}

RealSeries make_series(const TimeGrid& grid, Eigen::VectorXd values, SeriesKind kind, double rate) {
  RealSeries out;
  out.grid = grid;
  out.values = std::move(values);
  out.kind = kind;
  out.units = SeriesUnits::e_fermi_velocity;
  out.envelope_rate = rate;
  return out;
}

std::vector<double> grid_times(const TimeGrid& grid) {
  grid.validate();
  std::vector<double> t(static_cast<std::size_t>(grid.n_samples));
  for (int k = 0; k < grid.n_samples; ++k) t[static_cast<std::size_t>(k)] = grid.at(k);
  return t;
}

// Evaluates sum_i weight_i * term(freq_i * t) * damping for each time, where the
// sum runs over the off-diagonal (n >= 1) entries of the table.
template <typename Term>
Eigen::VectorXd sum_current_terms(const WeightTable& table, const Eigen::VectorXd& freq,
                                  std::span<const double> times, const BroadeningModel& broadening,
                                  const EvaluationOptions& options, Term term) {
  const Eigen::VectorXd& u = table.off_diagonal();
  const double rate = broadening.current_rate();
  Eigen::VectorXd out(static_cast<Eigen::Index>(times.size()));
  detail::parallel_for(times.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const double t = times[k];
      double sum = 0.0;
      if (options.per_term_broadening) {
        // Gamma_n + Gamma_{n-1} with Gamma_n = gamma for every level.
        for (Eigen::Index i = 0; i < u.size(); ++i) sum += u[i] * term(i, freq, t) * std::exp(-rate * t);
      } else {
        for (Eigen::Index i = 0; i < u.size(); ++i) sum += u[i] * term(i, freq, t);
        sum *= std::exp(-rate * t);
      }
      out[static_cast<Eigen::Index>(k)] = sum;
    }
  });
  return out;
}

}  // namespace

void TimeGrid::validate() const {
  if (n_samples < 2) throw DomainError("a time grid needs at least two samples");
  if (!(t_start >= 0.0) || !(t_end > t_start) || !std::isfinite(t_end)) {
    throw DomainError("time grid needs t_end > t_start >= 0");
  }
}

Eigen::VectorXd TimeGrid::times() const {
  validate();
  Eigen::VectorXd t(n_samples);
  for (int k = 0; k < n_samples; ++k) t[k] = at(k);
  return t;
}

void BroadeningModel::validate() const {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw DomainError("broadening must be non-negative");
}

double BroadeningModel::current_rate() const {
  validate();
  return 2.0 * gamma / Constants::hbar;
}

Eigen::VectorXcd autocorrelation_at(const WeightTable& table, const SpectrumModel& model,
                                    std::span<const double> times, const BroadeningModel& broadening,
                                    const EvaluationOptions& options) {
  broadening.validate();
  const Eigen::VectorXd w = level_frequencies(table, model);
  const Eigen::VectorXd& u = table.diagonal();
  const double rate = options.damp_autocorrelation ? broadening.gamma / Constants::hbar : 0.0;
  const BandContent bands = table.band_content();

  Eigen::VectorXcd out(static_cast<Eigen::Index>(times.size()));
  detail::parallel_for(times.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const double t = times[k];
      double re = 0.0;
      double im = 0.0;
      for (Eigen::Index i = 0; i < u.size(); ++i) {
        const double phase = w[i] * t;
        const double c = std::cos(phase);
        switch (bands) {
          case BandContent::positive: re += u[i] * c; im -= u[i] * std::sin(phase); break;
          case BandContent::negative: re += u[i] * c; im += u[i] * std::sin(phase); break;
          case BandContent::both: re += 2.0 * u[i] * c; break;
        }
      }
      const double damping = rate > 0.0 ? std::exp(-rate * t) : 1.0;
      out[static_cast<Eigen::Index>(k)] = std::complex<double>(re, im) * damping;
    }
  });
  return out;
}

ComplexSeries autocorrelation(const WeightTable& table, const SpectrumModel& model, const TimeGrid& grid,
                              const BroadeningModel& broadening, const EvaluationOptions& options) {
  const auto t = grid_times(grid);
  ComplexSeries out;
  out.grid = grid;
  out.values = autocorrelation_at(table, model, t, broadening, options);
  out.kind = SeriesKind::autocorrelation;
  out.units = SeriesUnits::dimensionless;
  out.envelope_rate = options.damp_autocorrelation ? broadening.gamma / Constants::hbar : 0.0;
  return out;
}

CurrentValues current_single_band_at(const WeightTable& table, const SpectrumModel& model,
                                     std::span<const double> times, Band s, const BroadeningModel& broadening,
                                     const EvaluationOptions& options) {
  require_single_band(table, s);
  const Eigen::VectorXd levels = level_frequencies(table, model);
  const Eigen::Index m = table.off_diagonal().size();
  const Eigen::VectorXd gaps = levels.tail(m) - levels.head(m);
  CurrentValues out;
  out.jx = sum_current_terms(table, gaps, times, broadening, options,
                             [](Eigen::Index i, const Eigen::VectorXd& f, double t) { return std::cos(f[i] * t); });
  out.jx *= static_cast<double>(sign(s));
  out.jy = sum_current_terms(table, gaps, times, broadening, options,
                             [](Eigen::Index i, const Eigen::VectorXd& f, double t) { return std::sin(f[i] * t); });
  return out;
}

CurrentSeries current_single_band(const WeightTable& table, const SpectrumModel& model, const TimeGrid& grid,
                                  Band s, const BroadeningModel& broadening, const EvaluationOptions& options) {
  const auto t = grid_times(grid);
  auto values = current_single_band_at(table, model, t, s, broadening, options);
  const double rate = broadening.current_rate();
  return {make_series(grid, std::move(values.jx), SeriesKind::current_x, rate),
          make_series(grid, std::move(values.jy), SeriesKind::current_y, rate)};
}

CurrentValues current_two_band_at(const WeightTable& table, const SpectrumModel& model,
                                  std::span<const double> times, const BroadeningModel& broadening,
                                  const EvaluationOptions& options) {
  require_two_band(table);
  const Eigen::VectorXd levels = level_frequencies(table, model);
  const Eigen::Index m = table.off_diagonal().size();
  const Eigen::VectorXd sums = levels.tail(m) + levels.head(m);    // interband
  const Eigen::VectorXd diffs = levels.tail(m) - levels.head(m);   // intraband

  CurrentValues out;
  out.jx = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(times.size()));
  out.jy = sum_current_terms(table, sums, times, broadening, options,
                             [&diffs](Eigen::Index i, const Eigen::VectorXd& f, double t) {
                               return std::sin(f[i] * t) + std::sin(diffs[i] * t);
                             });
  return out;
}

CurrentSeries current_two_band(const WeightTable& table, const SpectrumModel& model, const TimeGrid& grid,
                               const BroadeningModel& broadening, const EvaluationOptions& options) {
  const auto t = grid_times(grid);
  auto values = current_two_band_at(table, model, t, broadening, options);
  const double rate = broadening.current_rate();
  return {make_series(grid, std::move(values.jx), SeriesKind::current_x, rate),
          make_series(grid, std::move(values.jy), SeriesKind::current_y, rate)};
}

RealSeries with_broadening(const RealSeries& series, const BroadeningModel& broadening) {
  const double rate = broadening.current_rate();
  RealSeries out = series;
  for (Eigen::Index k = 0; k < out.size(); ++k) out.values[k] *= std::exp(-rate * out.time(k));
  out.envelope_rate += rate;
  return out;
}

RealSeries total_current_both_valleys(const RealSeries& per_valley) {
  RealSeries out = per_valley;
  out.values *= 2.0;
  return out;
}

RealSeries squared_modulus(const ComplexSeries& series) {
  RealSeries out;
  out.grid = series.grid;
  out.values = series.values.cwiseAbs2();
  out.kind = series.kind;
  out.units = SeriesUnits::dimensionless;
  out.envelope_rate = 2.0 * series.envelope_rate;
  return out;
}

double current_bound(const WeightTable& table) { return table.off_diagonal().sum(); }

}  // namespace landau
