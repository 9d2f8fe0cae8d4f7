#include "hyperdyn/escape.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "hyperdyn/realdyn.hpp"

namespace hyperdyn {
namespace {

bool within_guard(double x, double y) noexcept {
  return std::abs(x) <= kOverflowGuard && std::abs(y) <= kOverflowGuard;
}

}  // namespace

void EscapeConfig::validate() const {
  if (max_iter == 0) throw std::invalid_argument("escape config: max_iter must be >= 1");
  if (!(bound > 0.0) || !std::isfinite(bound)) {
    throw std::invalid_argument("escape config: bound must be positive and finite");
  }
}

HyperbolicNumber hyper_step(const HyperbolicNumber& z, const HyperbolicNumber& c) noexcept {
  if (!within_guard(z.x(), z.y())) return HyperbolicNumber::overflow_sentinel();
  const double x = z.x() * z.x() + z.y() * z.y() + c.x();
  const double y = 2.0 * z.x() * z.y() + c.y();
  if (!within_guard(x, y)) return HyperbolicNumber::overflow_sentinel();
  return HyperbolicNumber::unchecked(x, y);
}

EscapeResult escape_time(const HyperbolicNumber& z0, const HyperbolicNumber& c, const EscapeConfig& cfg) {
  cfg.validate();
  double x = z0.x();
  double y = z0.y();
  const double cx = c.x();
  const double cy = c.y();
  double norm = std::abs(x * x - y * y);

  for (std::size_t n = 1; n <= cfg.max_iter; ++n) {
    const double nx = x * x + y * y + cx;
    const double ny = 2.0 * x * y + cy;
    x = nx;
    y = ny;
    if (!within_guard(x, y)) {
      if (x == y || x == -y) return {std::nullopt, cfg.max_iter, 0.0};
      return {n, n, std::numeric_limits<double>::infinity()};
    }
    norm = std::abs(x * x - y * y);
    if (norm > cfg.bound) return {n, n, norm};
  }
  return {std::nullopt, cfg.max_iter, norm};
}

std::vector<HyperbolicNumber> hyper_orbit(const HyperbolicNumber& z0, const HyperbolicNumber& c,
                                          std::size_t n) {
  std::vector<HyperbolicNumber> orbit;
  orbit.reserve(n + 1);
  HyperbolicNumber z = within_guard(z0.x(), z0.y()) ? z0 : HyperbolicNumber::overflow_sentinel();
  orbit.push_back(z);
  for (std::size_t k = 0; k < n; ++k) {
    z = hyper_step(z, c);
    orbit.push_back(z);
  }
  return orbit;
}

}  // namespace hyperdyn
