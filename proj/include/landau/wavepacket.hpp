#pragma once

#include <Eigen/Core>

namespace landau {

enum class BandContent { positive, negative, both };

/// Gaussian population of Landau levels around n0:
/// c_n ~ exp(-(n - n0)^2 / (2 sigma)).
struct PacketSpec {
  int n0 = 15;
  double sigma = 3.0;
  BandContent bands = BandContent::positive;
  double tail_tolerance = 1e-12;
  // k_x centre and width of the packet. They integrate out of every
  // observable; kept so a configuration round-trips unchanged.
  double k0x = 0.0;
  double dk = 1.0;

  /// Throws DomainError unless n0 >= 1, sigma > 0, 0 < tail_tolerance < 1.
  void validate() const;
};

struct LevelRange {
  int n_min;
  int n_max;

  int size() const { return n_max - n_min + 1; }
  bool contains(int n) const { return n >= n_min && n <= n_max; }
};

/// Smallest range [max(0, n0 - k), n0 + k] whose excluded share of the
/// Gaussian amplitude sum over n >= 0 is below spec.tail_tolerance.
LevelRange truncation_range(const PacketSpec& spec);

/// Level-population overlaps U_{m,n} for |m - n| <= 1.
///
/// U_{m,n} = a_m a_n / Z for a single amplitude profile a_n, so the table is
/// rank one and symmetric. Z is chosen so the populations U_{n,n} summed
/// over every populated (n, s) equal one; for two-band packets each band
/// carries half of that total.
class WeightTable {
 public:
  /// Builds a normalized table from raw amplitudes a_n, n = n_min, n_min+1, ...
  /// Throws WeightTableError for an empty or all-zero profile.
  static WeightTable from_amplitudes(int n_min, const Eigen::Ref<const Eigen::VectorXd>& amplitudes,
                                     BandContent bands);

  int n_min() const { return n_min_; }
  int n_max() const { return n_min_ + static_cast<int>(diag_.size()) - 1; }
  LevelRange range() const { return {n_min(), n_max()}; }
  BandContent band_content() const { return bands_; }
  int band_count() const { return bands_ == BandContent::both ? 2 : 1; }

  /// U_{n,n} for n = n_min..n_max.
  const Eigen::VectorXd& diagonal() const { return diag_; }
  /// U_{n-1,n} for n = n_min+1..n_max.
  const Eigen::VectorXd& off_diagonal() const { return offdiag_; }

  /// Sum of U_{n,n} over every populated (n, s); one by construction.
  double total_population() const { return band_count() * diag_.sum(); }

  /// U_{m,n}; zero outside the range. Throws WeightTableError for |m - n| > 1.
  double operator()(int m, int n) const;

 private:
  WeightTable(int n_min, Eigen::VectorXd diag, Eigen::VectorXd offdiag, BandContent bands)
      : n_min_(n_min), diag_(std::move(diag)), offdiag_(std::move(offdiag)), bands_(bands) {}

  int n_min_;
  Eigen::VectorXd diag_;
  Eigen::VectorXd offdiag_;
  BandContent bands_;
};

WeightTable build_weights(const PacketSpec& spec);

inline double weight_at(const WeightTable& table, int m, int n) { return table(m, n); }

}  // namespace landau
