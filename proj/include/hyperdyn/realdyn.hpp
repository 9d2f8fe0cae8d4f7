#pragma once

// The real quadratic family f_c(x) = x^2 + c.
//
// For c <= 1/4 the map is affinely conjugate to the logistic map
// g_r(xi) = r * xi * (1 - xi) with r = 2 * outer_fixed_point(c). The set of
// seeds with bounded orbits is
//   - a Cantor set inside [-rho, -gap] U [gap, rho]   for c < -2,
//   - the interval [-rho, rho]                        for -2 <= c <= 1/4,
//   - empty                                           for c > 1/4,
// where rho is the outer fixed point and gap the Cantor gap radius.

#include <cstddef>
#include <variant>
#include <vector>

namespace hyperdyn {

/// Orbits whose magnitude exceeds this are replaced by +inf.
inline constexpr double kOverflowGuard = 1e150;

inline constexpr double kCantorThreshold = -2.0;
inline constexpr double kEmptyThreshold = 0.25;

struct CantorSet {
  double c;
  double outer_radius;  ///< largest fixed point
  double gap_radius;    ///< the set avoids (-gap_radius, gap_radius)
};

struct IntervalSet {
  double c;
  double outer_radius;  ///< bounded set is [-outer_radius, outer_radius]
};

struct EmptySet {
  double c;
};

using RealBoundednessClass = std::variant<CantorSet, IntervalSet, EmptySet>;

struct LogisticParams {
  double r;
  double outer_radius;
};

struct FixedPoints {
  double outer;  ///< (1 + sqrt(1 - 4c)) / 2, repelling for c < 1/4
  double inner;  ///< (1 - sqrt(1 - 4c)) / 2
};

struct LogisticGapBounds {
  double lower;  ///< eta_-: the logistic Cantor set lies in [0, lower] U [upper, 1]
  double upper;
};

constexpr double real_step(double x, double c) noexcept { return x * x + c; }

/// [x0, f(x0), ..., f^n(x0)]; once |x| exceeds kOverflowGuard that entry and
/// every later one is +inf.
std::vector<double> real_orbit(double x0, double c, std::size_t n);

/// (1 + sqrt(1 - 4c)) / 2. Throws std::domain_error for c > 1/4.
double outer_fixed_point(double c);

FixedPoints fixed_points(double c);

LogisticParams logistic_params(double c);

/// xi = (1 - x / rho(c)) / 2.
double to_logistic(double x, double c);

/// Inverse of to_logistic: x = rho(c) * (1 - 2 xi).
double from_logistic(double xi, double c);

constexpr double logistic_step(double xi, double r) noexcept { return r * (1.0 - xi) * xi; }

/// Nonnegative root of 4 g^2 = -4c - 2 - 2 sqrt(1 - 4c). Defined for c <= -2.
double cantor_gap_radius(double c);

/// (r -/+ sqrt(r^2 - 4r)) / (2r) for r >= 4.
LogisticGapBounds logistic_gap_bounds(double r);

/// Boundary values c = -2 and c = 1/4 classify as IntervalSet.
RealBoundednessClass classify_real(double c);

/// Exact for -2 <= c <= 1/4 (|x0| <= rho). For c < -2, iterates at most
/// max_iter steps and reports false once |x_n| > rho, after which the orbit
/// increases monotonically to infinity.
bool bounded_real(double x0, double c, std::size_t max_iter);

/// True iff some seed in [lo, hi] keeps |x_n| <= rho for n = 0..max_iter.
/// Evaluated by pushing the whole window forward with outward rounding, so
/// it never misses a surviving seed. A degenerate window [x, x] agrees with
/// bounded_real(x, c, max_iter).
bool bounded_real_window(double lo, double hi, double c, std::size_t max_iter);

}  // namespace hyperdyn
