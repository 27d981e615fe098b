#include "landau/wavepacket.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "landau/errors.hpp"

namespace landau {

namespace {

double gaussian_amplitude(int n, const PacketSpec& spec) {
  const double d = n - spec.n0;
  return std::exp(-d * d / (2.0 * spec.sigma));
}

// Sum of amplitudes from `first` stepping by `step` until the terms no longer
// register against the running total (or n < 0).
double tail_sum(int first, int step, const PacketSpec& spec) {
  double sum = 0.0;
  for (int n = first; n >= 0; n += step) {
    const double term = gaussian_amplitude(n, spec);
    sum += term;
    // Terms decay monotonically away from n0, so stop once negligible.
    if (term == 0.0 || term < 1e-20 * sum) break;
  }
  return sum;
}

}  // namespace

void PacketSpec::validate() const {
  if (n0 < 1) throw DomainError("n0 must be >= 1 (got " + std::to_string(n0) + ")");
  if (!(sigma > 0.0) || !std::isfinite(sigma)) throw DomainError("sigma must be positive");
  if (!(tail_tolerance > 0.0 && tail_tolerance < 1.0)) {
    throw DomainError("tail_tolerance must lie in (0, 1)");
  }
}

LevelRange truncation_range(const PacketSpec& spec) {
  spec.validate();
  const double total = tail_sum(spec.n0, 1, spec) + tail_sum(spec.n0 - 1, -1, spec);
  for (int k = 0;; ++k) {
    const int lo = std::max(0, spec.n0 - k);
    const int hi = spec.n0 + k;
    const double excluded = tail_sum(hi + 1, 1, spec) + (lo > 0 ? tail_sum(lo - 1, -1, spec) : 0.0);
    if (excluded < spec.tail_tolerance * total) return {lo, hi};
  }
}

WeightTable WeightTable::from_amplitudes(int n_min, const Eigen::Ref<const Eigen::VectorXd>& amplitudes,
                                         BandContent bands) {
  if (amplitudes.size() == 0) throw WeightTableError("empty level range");
  if (n_min < 0) throw WeightTableError("levels start at n = 0");
  if ((amplitudes.array() < 0.0).any()) throw WeightTableError("amplitudes must be non-negative");
  const int band_count = bands == BandContent::both ? 2 : 1;
  const double norm = band_count * amplitudes.squaredNorm();
  if (!(norm > 0.0)) throw WeightTableError("amplitude profile carries no weight");

  const Eigen::Index size = amplitudes.size();
  Eigen::VectorXd diag = amplitudes.array().square() / norm;
  Eigen::VectorXd offdiag =
      (amplitudes.head(size - 1).array() * amplitudes.tail(size - 1).array()) / norm;
  return WeightTable(n_min, std::move(diag), std::move(offdiag), bands);
}

double WeightTable::operator()(int m, int n) const {
  if (std::abs(m - n) > 1) {
    throw WeightTableError("only |m - n| <= 1 overlaps are stored (requested " + std::to_string(m) +
                           ", " + std::to_string(n) + ")");
  }
  if (!range().contains(m) || !range().contains(n)) return 0.0;
  if (m == n) return diag_[n - n_min_];
  return offdiag_[std::max(m, n) - n_min_ - 1];
}

WeightTable build_weights(const PacketSpec& spec) {
  const LevelRange range = truncation_range(spec);
  Eigen::VectorXd amplitudes(range.size());
  for (int i = 0; i < range.size(); ++i) amplitudes[i] = gaussian_amplitude(range.n_min + i, spec);
  return WeightTable::from_amplitudes(range.n_min, amplitudes, spec.bands);
}

}  // namespace landau
