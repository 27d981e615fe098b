#pragma once

#include <string_view>

namespace landau {

/// CODATA 2018 exact values, SI.
struct Constants {
  static constexpr double hbar = 1.054571817e-34;          // J s
  static constexpr double e_charge = 1.602176634e-19;      // C
  static constexpr double fermi_velocity_default = 1.0e6;  // m/s
};

/// Physical inputs of a run. The gap only enters the interband frequency.
struct FieldParams {
  double B = 10.0;                                          // T
  double fermi_velocity = Constants::fermi_velocity_default;  // m/s
  double gap_energy = 0.0;                                  // J

  /// Throws DomainError unless B > 0, v_F > 0 and gap >= 0.
  void validate() const;

  friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

/// L = sqrt(hbar / (e B)), in metres.
double magnetic_length(const FieldParams& params);

/// Omega = sqrt(2) v_F / L, in rad/s. hbar * Omega is the n = 1 level energy.
double omega(const FieldParams& params);

enum class Unit { joule, millielectronvolt, second, femtosecond, picosecond, radian_per_second };

/// Exact-factor conversion. Energies (J, meV) and angular frequencies (rad/s)
/// share one dimension through hbar; times form the other.
/// Throws DomainError for incompatible dimensions.
double convert(double value, Unit from, Unit to);

Unit parse_unit(std::string_view symbol);
std::string_view unit_symbol(Unit unit);

constexpr double mev_to_joule(double mev) { return mev * Constants::e_charge * 1e-3; }
constexpr double joule_to_mev(double joule) { return joule / (Constants::e_charge * 1e-3); }
constexpr double fs_to_s(double fs) { return fs * 1e-15; }
constexpr double s_to_fs(double s) { return s * 1e15; }

}  // namespace landau
