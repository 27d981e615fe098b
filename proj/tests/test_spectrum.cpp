#include <cmath>
#include <numbers>

#include "doctest.h"
#include "landau/errors.hpp"
#include "landau/spectrum.hpp"

using namespace landau;

namespace {

const SpectrumModel kModel{FieldParams{10.0}};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("Landau energies") {
  CHECK(landau_energy(kModel, 0, Band::positive) == 0.0);
  CHECK(landau_energy(kModel, 0, Band::negative) == 0.0);
  CHECK(joule_to_mev(landau_energy(kModel, 1, Band::positive)) == doctest::Approx(114.8).epsilon(2e-3));
  CHECK(landau_energy(kModel, 4, Band::negative) == doctest::Approx(-2 * landau_energy(kModel, 1, Band::positive)));
  for (int n = 0; n < 50; ++n) {
    CHECK(kModel.energy(n, Band::negative) == -kModel.energy(n, Band::positive));
  }
  CHECK_THROWS_AS(kModel.energy(-1), DomainError);
}

TEST_CASE("spectrum derivatives") {
  const auto d1 = spectrum_derivatives(kModel, 1);
  CHECK(d1.first == doctest::Approx(kModel.level_quantum() / 2).epsilon(1e-15));
  CHECK(d1.second == doctest::Approx(-kModel.level_quantum() / 4).epsilon(1e-15));
  CHECK_THROWS_AS(spectrum_derivatives(kModel, 0), DomainError);

  // Central finite-difference oracle on the exact spectrum.
  const auto d15 = spectrum_derivatives(kModel, 15);
  const double fd2 = kModel.energy(16) - 2 * kModel.energy(15) + kModel.energy(14);
  CHECK(rel(d15.second, fd2) < 0.005);
  CHECK(2 * std::numbers::pi * Constants::hbar / d15.first == doctest::Approx(279e-15).epsilon(0.02));

  for (int n0 = 10; n0 <= 200; ++n0) {
    const double fd1 = (kModel.energy(n0 + 1) - kModel.energy(n0 - 1)) / 2;
    CHECK(rel(spectrum_derivatives(kModel, n0).first, fd1) < 0.01);
  }
}

TEST_CASE("time scales at the published parameters") {
  const auto t15 = timescales(kModel, 15);
  CHECK(t15.classical == doctest::Approx(279e-15).epsilon(0.02));
  CHECK(t15.revival == doctest::Approx(17e-12).epsilon(0.02));
  CHECK(t15.zitterbewegung == doctest::Approx(4.7e-15).epsilon(0.02));

  const auto t11 = timescales(kModel, 11);
  CHECK(t11.classical == doctest::Approx(239e-15).epsilon(0.02));
  CHECK(t11.zitterbewegung == doctest::Approx(5.4e-15).epsilon(0.02));
  // The caption's "11 ps" is rounded to whole picoseconds; 4 n0 T_Cl = 10.52 ps.
  CHECK(t11.revival == doctest::Approx(11e-12).epsilon(0.05));
  CHECK(t11.revival == doctest::Approx(44 * t11.classical).epsilon(1e-12));
}

TEST_CASE("closed forms and ratio identities") {
  constexpr double pi = std::numbers::pi;
  for (int n0 : {1, 2, 5, 11, 15, 50}) {
    const auto t = timescales(kModel, n0);
    const double w = kModel.omega();
    const double r = std::sqrt(static_cast<double>(n0));
    CHECK(rel(t.classical, 4 * pi * r / w) < 1e-12);
    CHECK(rel(t.revival, 16 * pi * n0 * r / w) < 1e-12);
    CHECK(rel(t.zitterbewegung, pi / (w * r)) < 1e-12);
    CHECK(rel(t.revival / t.classical, 4.0 * n0) < 1e-12);
    CHECK(rel(t.classical / t.zitterbewegung, 4.0 * n0) < 1e-12);
    CHECK(rel(t.revival / t.zitterbewegung, 16.0 * n0 * n0) < 1e-12);
    CHECK(t.zitterbewegung < t.classical);
    CHECK(t.classical < t.revival);
  }
  CHECK_THROWS_AS(timescales(kModel, 0), DomainError);
}

TEST_CASE("time scales go as 1/sqrt(B)") {
  const SpectrumModel strong{FieldParams{40.0}};
  for (int n0 : {1, 2, 5, 11, 15, 50}) {
    const auto a = timescales(kModel, n0);
    const auto b = timescales(strong, n0);
    CHECK(rel(b.classical, a.classical / 2) < 1e-12);
    CHECK(rel(b.revival, a.revival / 2) < 1e-12);
    CHECK(rel(b.zitterbewegung, a.zitterbewegung / 2) < 1e-12);
  }
}

TEST_CASE("zitterbewegung period with a gap") {
  const int n0 = 15;
  CHECK(zb_period_with_gap(kModel, n0) == timescales(kModel, n0).zitterbewegung);

  FieldParams gapped{10.0};
  gapped.gap_energy = kModel.energy(n0);
  CHECK(rel(zb_period_with_gap(SpectrumModel{gapped}, n0), timescales(kModel, n0).zitterbewegung / std::sqrt(2.0)) <
        1e-14);

  double previous = zb_period_with_gap(kModel, n0);
  for (double gap_mev : {1.0, 10.0, 100.0, 1e3, 1e5}) {
    FieldParams p{10.0};
    p.gap_energy = mev_to_joule(gap_mev);
    const double period = zb_period_with_gap(SpectrumModel{p}, n0);
    CHECK(period < previous);
    previous = period;
  }
  CHECK(rel(previous, std::numbers::pi * Constants::hbar / mev_to_joule(1e5)) < 1e-4);
  // Gap leaves the classical and revival periods unchanged.
  FieldParams p{10.0};
  p.gap_energy = mev_to_joule(10.0);
  CHECK(timescales(SpectrumModel{p}, n0).revival == timescales(kModel, n0).revival);
}
