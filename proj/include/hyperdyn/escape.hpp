#pragma once

// Brute-force escape-time iteration of z -> z^2 + c over the hyperbolic
// numbers, using |z * conj(z)| > bound as the divergence criterion.
//
// This is an empirical oracle. The quadratic form vanishes on the null cone,
// so no finite bound certifies divergence near the diagonals; analytic
// membership lives in classify.

#include <cstddef>
#include <optional>
#include <vector>

#include "hyperdyn/hypnum.hpp"

namespace hyperdyn {

struct EscapeConfig {
  std::size_t max_iter = 200;
  double bound = 4.0;

  /// Throws std::invalid_argument if max_iter == 0 or bound is not positive.
  void validate() const;

  friend bool operator==(const EscapeConfig&, const EscapeConfig&) = default;
};

struct EscapeResult {
  std::optional<std::size_t> escaped_at;  ///< first n >= 1 with |quad_form(f^n(z0))| > bound
  std::size_t steps_run = 0;
  double final_norm_abs = 0.0;

  bool survived() const noexcept { return !escaped_at.has_value(); }

  friend bool operator==(const EscapeResult&, const EscapeResult&) = default;
};

/// (x^2 + y^2 + c1, 2xy + c2); the overflow sentinel once |x| or |y| exceeds
/// kOverflowGuard.
HyperbolicNumber hyper_step(const HyperbolicNumber& z, const HyperbolicNumber& c) noexcept;

/// If the overflow guard trips on an orbit lying exactly on the null cone the
/// orbit is reported as surviving (the diagonals are invariant and the norm
/// stays 0); any other guard trip counts as an escape with infinite norm.
EscapeResult escape_time(const HyperbolicNumber& z0, const HyperbolicNumber& c, const EscapeConfig& cfg);

inline EscapeResult mandelbrot_escape(const HyperbolicNumber& c, const EscapeConfig& cfg) {
  return escape_time(HyperbolicNumber{}, c, cfg);
}

/// [z0, f(z0), ..., f^n(z0)] with the overflow sentinel after the guard trips.
std::vector<HyperbolicNumber> hyper_orbit(const HyperbolicNumber& z0, const HyperbolicNumber& c,
                                          std::size_t n);

}  // namespace hyperdyn
