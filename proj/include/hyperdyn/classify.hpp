#pragma once

// Analytic parameter-space classification for f_c(z) = z^2 + c over the
// hyperbolic numbers.
//
// In characteristic coordinates the map decouples into two real quadratic
// maps, so the filled Julia set is the product of the two real bounded sets
// and the Mandelbrot set is the square [-2, 1/4]^2 together with the axes
// c_X = 0 and c_Y = 0 (the null-cone diagonals in Cartesian terms).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "hyperdyn/hypnum.hpp"
#include "hyperdyn/realdyn.hpp"

namespace hyperdyn {

enum class Chamber { ConnectedNonempty, Disconnected, TotallyDisconnected, Empty, AxisDegenerate };

enum class AxisKind { cX_zero, cY_zero, both_zero };

struct AxisDegeneracy {
  AxisKind which_axis;
  double nonaxis_c;  ///< the remaining characteristic coordinate; 0 for both_zero

  friend bool operator==(const AxisDegeneracy&, const AxisDegeneracy&) = default;
};

struct ChamberClass {
  Chamber kind;
  std::optional<AxisDegeneracy> axis;  ///< set iff kind == AxisDegenerate

  friend bool operator==(const ChamberClass&, const ChamberClass&) = default;
};

struct JuliaDescription {
  RealBoundednessClass factor_X;
  RealBoundednessClass factor_Y;
  ChamberClass chamber;
};

/// Description of the filled Julia set when c lies on a characteristic axis.
///
/// For one zero coordinate the record carries the claimed set
///   C x [-1, 1]   (C along the nonzero coordinate, [-1, 1] along the zero one)
/// with C contained in [-outer_radius, -inner_radius] U [inner_radius, outer_radius].
/// That claim is carried as stated and is not
/// verified here (claim_unverified). c = 0 is the pure squaring map:
/// both factors are [-1, 1] when each coordinate must stay bounded. Under the
/// norm escape test the bounded seeds are |X0 Y0| <= 1 instead.
struct AxisJulia {
  AxisKind which_axis;
  double nonaxis_c;
  bool empty;
  double outer_radius;
  double inner_radius;
  double axis_factor_radius;
  bool claim_unverified;
};

/// Raised when an analytic product description is requested for a parameter
/// on a characteristic axis; use axis_julia for those.
class AxisParameterError : public std::invalid_argument {
 public:
  explicit AxisParameterError(const std::string& what) : std::invalid_argument(what) {}
};

std::string_view chamber_name(Chamber kind);
std::string_view axis_name(AxisKind kind);

/// "Interval[outer=...]", "Cantor[outer=...,gap=...]" or "Empty".
std::string describe(const RealBoundednessClass& cls);

/// Returns the axis configuration of c, or nullopt when both characteristic
/// coordinates are farther than kDiagonalTolerance from zero.
std::optional<AxisDegeneracy> axis_degeneracy(const HyperbolicNumber& c);

bool mandelbrot_member(const HyperbolicNumber& c);

/// Walls at -2 and 1/4 count as inside the closed square.
ChamberClass quadchotomy(const HyperbolicNumber& c);

/// Throws AxisParameterError for axis parameters.
JuliaDescription julia_description(const HyperbolicNumber& c);

/// bounded_real(X0, c_X) && bounded_real(Y0, c_Y). Throws AxisParameterError
/// for axis parameters.
bool julia_membership(const HyperbolicNumber& z0, const HyperbolicNumber& c, std::size_t max_iter);

/// Window form of julia_membership: true iff the box
///   [X0 - half_X, X0 + half_X] x [Y0 - half_Y, Y0 + half_Y]
/// meets the product of the two max_iter-step survivor sets.
bool julia_membership_window(const HyperbolicNumber& z0, const HyperbolicNumber& c, double half_X,
                             double half_Y, std::size_t max_iter);

/// Throws std::invalid_argument unless at least one coordinate is on an axis.
AxisJulia axis_julia(const HyperbolicNumber& c);

}  // namespace hyperdyn
