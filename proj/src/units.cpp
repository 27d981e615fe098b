#include "landau/units.hpp"

#include <cmath>
#include <string>

#include "landau/errors.hpp"

namespace landau {

namespace {

enum class Dimension { energy, time };

Dimension dimension_of(Unit unit) {
  switch (unit) {
    case Unit::joule:
    case Unit::millielectronvolt:
    case Unit::radian_per_second:
      return Dimension::energy;
    case Unit::second:
    case Unit::femtosecond:
    case Unit::picosecond:
      return Dimension::time;
  }
  throw DomainError("unknown unit");
}

// Multiplier taking a value in `unit` to the SI base of its dimension (J or s).
double to_base(Unit unit) {
  switch (unit) {
    case Unit::joule: return 1.0;
    case Unit::millielectronvolt: return Constants::e_charge * 1e-3;
    case Unit::radian_per_second: return Constants::hbar;
    case Unit::second: return 1.0;
    case Unit::femtosecond: return 1e-15;
    case Unit::picosecond: return 1e-12;
  }
  throw DomainError("unknown unit");
}

}  // namespace

void FieldParams::validate() const {
  if (!(B > 0.0) || !std::isfinite(B)) {
    throw DomainError("magnetic field must be positive (B = " + std::to_string(B) + " T)");
  }
  if (!(fermi_velocity > 0.0) || !std::isfinite(fermi_velocity)) {
    throw DomainError("Fermi velocity must be positive");
  }
  if (!(gap_energy >= 0.0) || !std::isfinite(gap_energy)) {
    throw DomainError("gap energy must be non-negative");
  }
}

double magnetic_length(const FieldParams& params) {
  params.validate();
  return std::sqrt(Constants::hbar / (Constants::e_charge * params.B));
}

double omega(const FieldParams& params) {
  return std::sqrt(2.0) * params.fermi_velocity / magnetic_length(params);
}

double convert(double value, Unit from, Unit to) {
  if (dimension_of(from) != dimension_of(to)) {
    throw DomainError(std::string("cannot convert ") + std::string(unit_symbol(from)) + " to " +
                      std::string(unit_symbol(to)));
  }
  if (from == to) return value;
  return value * (to_base(from) / to_base(to));
}

Unit parse_unit(std::string_view symbol) {
  if (symbol == "J") return Unit::joule;
  if (symbol == "meV") return Unit::millielectronvolt;
  if (symbol == "s") return Unit::second;
  if (symbol == "fs") return Unit::femtosecond;
  if (symbol == "ps") return Unit::picosecond;
  if (symbol == "rad/s") return Unit::radian_per_second;
  throw DomainError("unsupported unit '" + std::string(symbol) + "'");
}

std::string_view unit_symbol(Unit unit) {
  switch (unit) {
    case Unit::joule: return "J";
    case Unit::millielectronvolt: return "meV";
    case Unit::second: return "s";
    case Unit::femtosecond: return "fs";
    case Unit::picosecond: return "ps";
    case Unit::radian_per_second: return "rad/s";
  }
  return "?";
}

}  // namespace landau
