#pragma once

#include "landau/units.hpp"

namespace landau {

/// Band index s: +1 conduction, -1 valence.
enum class Band : int { positive = 1, negative = -1 };

constexpr int sign(Band s) { return static_cast<int>(s); }

/// Landau-level spectrum E_{n,s} = s hbar Omega sqrt(n) for one field setting.
class SpectrumModel {
 public:
  explicit SpectrumModel(const FieldParams& params);

  const FieldParams& params() const { return params_; }
  double omega() const { return omega_; }
  /// hbar * Omega, the energy of level n = 1 (J).
  double level_quantum() const { return quantum_; }

  /// Energy of level n in band s (J). Throws DomainError for n < 0.
  double energy(int n, Band s = Band::positive) const;

 private:
  FieldParams params_;
  double omega_;
  double quantum_;
};

struct SpectrumDerivatives {
  double first;   // dE/dn at n0 (J per level)
  double second;  // d2E/dn2 at n0 (J per level^2)
};

struct TimeScales {
  double classical;        // 2 pi hbar / |E'|
  double revival;          // 4 pi hbar / |E''|
  double zitterbewegung;   // pi hbar / E_{n0}
};

double landau_energy(const SpectrumModel& model, int n, Band s);

/// Analytic derivatives of hbar Omega sqrt(n) at n0 >= 1.
SpectrumDerivatives spectrum_derivatives(const SpectrumModel& model, int n0);

/// Classical, revival and zitterbewegung periods of a packet centred at n0 >= 1.
TimeScales timescales(const SpectrumModel& model, int n0);

/// Zitterbewegung period with the interband energy E_{n0} replaced by
/// sqrt(E_{n0}^2 + E_gap^2). Equals timescales(model, n0).zitterbewegung
/// when the gap is zero.
double zb_period_with_gap(const SpectrumModel& model, int n0);

}  // namespace landau
