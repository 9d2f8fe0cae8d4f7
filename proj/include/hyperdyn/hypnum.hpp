#pragma once

// Hyperbolic (split-complex) numbers x + t*y with t^2 = 1.
//
// The canonical representation is Cartesian. Characteristic coordinates
// X = x - y, Y = x + y are a view in which multiplication is componentwise
// and the quadratic form is X*Y.

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace hyperdyn {

/// Tolerance for membership of the null-cone diagonals D+ (X = 0) and D- (Y = 0).
inline constexpr double kDiagonalTolerance = 1e-12;

struct CharCoords {
  double X = 0.0;
  double Y = 0.0;

  friend constexpr bool operator==(const CharCoords&, const CharCoords&) = default;
};

class HyperbolicNumber {
 public:
  constexpr HyperbolicNumber() = default;

  /// Throws std::invalid_argument unless both components are finite.
  constexpr HyperbolicNumber(double x, double y) : x_(x), y_(y) {
    if (!(std::isfinite(x) && std::isfinite(y))) {
      throw std::invalid_argument("hyperbolic number components must be finite");
    }
  }

  /// Result of arithmetic that may have overflowed; skips the finiteness check.
  static constexpr HyperbolicNumber unchecked(double x, double y) noexcept {
    HyperbolicNumber z;
    z.x_ = x;
    z.y_ = y;
    return z;
  }

  /// Marker used by orbit sequences once the overflow guard has tripped.
  static constexpr HyperbolicNumber overflow_sentinel() noexcept {
    return unchecked(std::numeric_limits<double>::infinity(),
                     std::numeric_limits<double>::infinity());
  }

  constexpr double x() const noexcept { return x_; }
  constexpr double y() const noexcept { return y_; }

  bool is_finite() const noexcept { return std::isfinite(x_) && std::isfinite(y_); }

  friend constexpr bool operator==(const HyperbolicNumber&, const HyperbolicNumber&) = default;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
};

constexpr HyperbolicNumber add(const HyperbolicNumber& a, const HyperbolicNumber& b) noexcept {
  return HyperbolicNumber::unchecked(a.x() + b.x(), a.y() + b.y());
}

constexpr HyperbolicNumber mul(const HyperbolicNumber& a, const HyperbolicNumber& b) noexcept {
  return HyperbolicNumber::unchecked(a.x() * b.x() + a.y() * b.y(),
                                     a.x() * b.y() + b.x() * a.y());
}

constexpr HyperbolicNumber conj(const HyperbolicNumber& z) noexcept {
  return HyperbolicNumber::unchecked(z.x(), -z.y());
}

/// z * conj(z) = x^2 - y^2. Indefinite; vanishes on the diagonals.
constexpr double quad_form(const HyperbolicNumber& z) noexcept {
  return z.x() * z.x() - z.y() * z.y();
}

constexpr CharCoords to_char(const HyperbolicNumber& z) noexcept {
  return {z.x() - z.y(), z.x() + z.y()};
}

constexpr HyperbolicNumber from_char(const CharCoords& c) noexcept {
  return HyperbolicNumber::unchecked(0.5 * (c.X + c.Y), 0.5 * (c.Y - c.X));
}

constexpr HyperbolicNumber from_char(double X, double Y) noexcept { return from_char(CharCoords{X, Y}); }

constexpr HyperbolicNumber operator+(const HyperbolicNumber& a, const HyperbolicNumber& b) noexcept {
  return add(a, b);
}

constexpr HyperbolicNumber operator*(const HyperbolicNumber& a, const HyperbolicNumber& b) noexcept {
  return mul(a, b);
}

/// D+ = { x + t*x }, i.e. X = 0.
inline bool on_diagonal_plus(const HyperbolicNumber& z, double tol = kDiagonalTolerance) noexcept {
  return std::abs(z.x() - z.y()) <= tol;
}

/// D- = { x - t*x }, i.e. Y = 0.
inline bool on_diagonal_minus(const HyperbolicNumber& z, double tol = kDiagonalTolerance) noexcept {
  return std::abs(z.x() + z.y()) <= tol;
}

inline bool on_null_cone(const HyperbolicNumber& z, double tol = kDiagonalTolerance) noexcept {
  return on_diagonal_plus(z, tol) || on_diagonal_minus(z, tol);
}

/// Shortest decimal that round-trips to the same double ("inf", "-inf", "nan" for non-finite).
std::string format_real(double v);

}  // namespace hyperdyn
