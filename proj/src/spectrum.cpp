#include "landau/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "landau/errors.hpp"

namespace landau {

namespace {

void require_center(int n0) {
  if (n0 < 1) {
    throw DomainError("central level must be >= 1 (got " + std::to_string(n0) + ")");
  }
}

}  // namespace

SpectrumModel::SpectrumModel(const FieldParams& params)
    : params_(params), omega_(landau::omega(params)), quantum_(Constants::hbar * omega_) {}

double SpectrumModel::energy(int n, Band s) const {
  if (n < 0) throw DomainError("level index must be >= 0 (got " + std::to_string(n) + ")");
  return sign(s) * quantum_ * std::sqrt(static_cast<double>(n));
}

double landau_energy(const SpectrumModel& model, int n, Band s) { return model.energy(n, s); }

SpectrumDerivatives spectrum_derivatives(const SpectrumModel& model, int n0) {
  require_center(n0);
  const double root = std::sqrt(static_cast<double>(n0));
  const double q = model.level_quantum();
  return {q / (2.0 * root), -q / (4.0 * n0 * root)};
}

TimeScales timescales(const SpectrumModel& model, int n0) {
  const auto d = spectrum_derivatives(model, n0);
  constexpr double pi = std::numbers::pi;
  const double hbar = Constants::hbar;
  return {2.0 * pi * hbar / std::abs(d.first),
          4.0 * pi * hbar / std::abs(d.second),
          pi * hbar / model.energy(n0)};
}

double zb_period_with_gap(const SpectrumModel& model, int n0) {
  require_center(n0);
  const double level = model.energy(n0);
  const double gap = model.params().gap_energy;
  return std::numbers::pi * Constants::hbar / std::hypot(level, gap);
}

}  // namespace landau
