#include "hyperdyn/realdyn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "hyperdyn/hypnum.hpp"

namespace hyperdyn {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_logistic_domain(double c, const char* what) {
  if (!(c <= kEmptyThreshold)) {
    throw std::domain_error(std::string(what) + ": requires c <= 1/4, got c = " + format_real(c));
  }
}

}  // namespace

std::vector<double> real_orbit(double x0, double c, std::size_t n) {
  std::vector<double> orbit;
  orbit.reserve(n + 1);
  double x = x0;
  bool tripped = !(std::abs(x) <= kOverflowGuard);
  orbit.push_back(tripped ? kInf : x);
  for (std::size_t k = 0; k < n; ++k) {
    if (!tripped) {
      x = real_step(x, c);
      tripped = !(std::abs(x) <= kOverflowGuard);
    }
    orbit.push_back(tripped ? kInf : x);
  }
  return orbit;
}

double outer_fixed_point(double c) {
  require_logistic_domain(c, "outer_fixed_point");
  return 0.5 * (1.0 + std::sqrt(1.0 - 4.0 * c));
}

FixedPoints fixed_points(double c) {
  require_logistic_domain(c, "fixed_points");
  const double s = std::sqrt(1.0 - 4.0 * c);
  return {0.5 * (1.0 + s), 0.5 * (1.0 - s)};
}

LogisticParams logistic_params(double c) {
  const double rho = outer_fixed_point(c);
  return {2.0 * rho, rho};
}

double to_logistic(double x, double c) {
  const double rho = outer_fixed_point(c);
  return 0.5 * (1.0 - x / rho);
}

double from_logistic(double xi, double c) { return outer_fixed_point(c) * (1.0 - 2.0 * xi); }

double cantor_gap_radius(double c) {
  const double four_g2 = -4.0 * c - 2.0 - 2.0 * std::sqrt(1.0 - 4.0 * c);
  if (!(c <= kEmptyThreshold) || four_g2 < 0.0) {
    throw std::domain_error("cantor_gap_radius: requires c <= -2, got c = " + format_real(c));
  }
  return std::sqrt(four_g2 / 4.0);
}

LogisticGapBounds logistic_gap_bounds(double r) {
  if (!(r >= 4.0)) {
    throw std::domain_error("logistic_gap_bounds: requires r >= 4, got r = " + format_real(r));
  }
  const double s = std::sqrt(r * r - 4.0 * r);
  return {(r - s) / (2.0 * r), (r + s) / (2.0 * r)};
}

RealBoundednessClass classify_real(double c) {
  if (c > kEmptyThreshold) return EmptySet{c};
  const double rho = outer_fixed_point(c);
  if (c < kCantorThreshold) return CantorSet{c, rho, cantor_gap_radius(c)};
  return IntervalSet{c, rho};
}

bool bounded_real(double x0, double c, std::size_t max_iter) {
  if (c > kEmptyThreshold) return false;
  const double rho = outer_fixed_point(c);
  if (c >= kCantorThreshold) return std::abs(x0) <= rho;

  double x = x0;
  if (!(std::abs(x) <= rho)) return false;
  for (std::size_t n = 0; n < max_iter; ++n) {
    x = real_step(x, c);
    if (!(std::abs(x) <= rho)) return false;
  }
  return true;
}

bool bounded_real_window(double lo, double hi, double c, std::size_t max_iter) {
  if (std::isnan(lo) || std::isnan(hi) || lo > hi) {
    throw std::invalid_argument("bounded_real_window: expected lo <= hi");
  }
  if (c > kEmptyThreshold) return false;
  // Upper bound on the exact outer fixed point; the rounded value can sit a few
  // ulps low, and clipping there would cut the fixed point out of the window.
  const double rho = outer_fixed_point(c) * (1.0 + 8.0 * std::numeric_limits<double>::epsilon());

  lo = std::max(lo, -rho);
  hi = std::min(hi, rho);
  if (lo > hi) return false;
  // [-rho, rho] is forward invariant outside the Cantor regime.
  if (c >= kCantorThreshold) return true;

  for (std::size_t n = 0; n < max_iter; ++n) {
    const double a2 = lo * lo;
    const double b2 = hi * hi;
    const double min_sq = (lo <= 0.0 && hi >= 0.0) ? 0.0 : std::min(a2, b2);
    const double max_sq = std::max(a2, b2);
    lo = std::nextafter(min_sq + c, -kInf);
    hi = std::nextafter(max_sq + c, kInf);
    // The image covers every seed that stays bounded, including the fixed point rho.
    if (lo <= -rho && hi >= rho) return true;
    lo = std::max(lo, -rho);
    hi = std::min(hi, rho);
    if (lo > hi) return false;
  }
  return true;
}

}  // namespace hyperdyn
