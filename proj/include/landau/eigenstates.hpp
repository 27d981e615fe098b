#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include <Eigen/Core>

#include "landau/errors.hpp"
#include "landau/spectrum.hpp"

namespace landau {

namespace detail {

// The normalized recurrence is carried as mantissa * exp(log_scale) so the
// Gaussian seed cannot underflow for large |xi| before the polynomial growth
// catches up.
template <typename Scalar>
struct ScaledHermite {
  Scalar previous;
  Scalar current;
  Scalar log_scale;

  explicit ScaledHermite(Scalar xi)
      : previous(0), current(1), log_scale(-xi * xi / 2 - std::log(std::numbers::pi_v<Scalar>) / 4) {}

  void advance(int k, Scalar xi) {
    using std::sqrt;
    const Scalar next = xi * sqrt(Scalar(2) / k) * current - sqrt(Scalar(k - 1) / k) * previous;
    previous = current;
    current = next;
    constexpr Scalar big = Scalar(1e100);
    if (std::abs(current) > big) {
      current /= big;
      previous /= big;
      log_scale += std::log(big);
    }
  }

  Scalar value() const { return current == Scalar(0) ? Scalar(0) : current * std::exp(log_scale); }
};

inline void require_level(int n) {
  if (n < 0) throw DomainError("Hermite function index must be >= 0 (got " + std::to_string(n) + ")");
}

}  // namespace detail

/// Dimensionless Hermite function exp(-xi^2/2) H_n(xi) / sqrt(2^n n! sqrt(pi)),
/// by the three-term recurrence on the normalized functions.
template <typename Scalar>
Scalar hermite_function(int n, Scalar xi) {
  detail::require_level(n);
  detail::ScaledHermite<Scalar> h(xi);
  for (int k = 1; k <= n; ++k) h.advance(k, xi);
  return h.value();
}

/// f_0(xi) .. f_{n_max}(xi) in one pass.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> hermite_functions(int n_max, Scalar xi) {
  detail::require_level(n_max);
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> out(n_max + 1);
  detail::ScaledHermite<Scalar> h(xi);
  out[0] = h.value();
  for (int k = 1; k <= n_max; ++k) {
    h.advance(k, xi);
    out[k] = h.value();
  }
  return out;
}

enum class Valley { K1, K2 };

/// Transverse part of a Landau eigenstate; f_{-1} is zero. The plane-wave
/// factor and the 1/sqrt(L) scale are left to callers, so the components are
/// individually unit-normalized and the spinor norm is 2 for n >= 1, 1 for n = 0.
template <typename Scalar>
struct Eigenspinor {
  Scalar upper;
  Scalar lower;
  Valley valley;
  int n;
  Band s;
};

/// K1: (-s f_{n-1}, f_n).  K2: (f_n, s f_{n-1}).
template <typename Scalar>
Eigenspinor<Scalar> eigenspinor(int n, Band s, Valley valley, Scalar xi) {
  detail::require_level(n);
  const Scalar fn = hermite_function(n, xi);
  const Scalar fprev = n == 0 ? Scalar(0) : hermite_function(n - 1, xi);
  const Scalar sv = static_cast<Scalar>(sign(s));
  if (valley == Valley::K1) return {-sv * fprev, fn, valley, n, s};
  return {fn, sv * fprev, valley, n, s};
}

}  // namespace landau
