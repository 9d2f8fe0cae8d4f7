#include "hyperdyn/classify.hpp"

#include <cmath>

namespace hyperdyn {
namespace {

bool in_closed_square_range(double v) { return v >= kCantorThreshold && v <= kEmptyThreshold; }

void require_off_axis(const HyperbolicNumber& c, const char* what) {
  if (axis_degeneracy(c)) {
    const auto cc = to_char(c);
    throw AxisParameterError(std::string(what) + ": parameter (c_X, c_Y) = (" + format_real(cc.X) +
                             ", " + format_real(cc.Y) +
                             ") lies on a characteristic axis; use axis_julia instead");
  }
}

}  // namespace

std::string_view chamber_name(Chamber kind) {
  switch (kind) {
    case Chamber::ConnectedNonempty:
      return "ConnectedNonempty";
    case Chamber::Disconnected:
      return "Disconnected";
    case Chamber::TotallyDisconnected:
      return "TotallyDisconnected";
    case Chamber::Empty:
      return "Empty";
    case Chamber::AxisDegenerate:
      return "AxisDegenerate";
  }
  return "?";
}

std::string_view axis_name(AxisKind kind) {
  switch (kind) {
    case AxisKind::cX_zero:
      return "cX_zero";
    case AxisKind::cY_zero:
      return "cY_zero";
    case AxisKind::both_zero:
      return "both_zero";
  }
  return "?";
}

std::string describe(const RealBoundednessClass& cls) {
  struct Visitor {
    std::string operator()(const CantorSet& s) const {
      return "Cantor[outer=" + format_real(s.outer_radius) + ",gap=" + format_real(s.gap_radius) + "]";
    }
    std::string operator()(const IntervalSet& s) const {
      return "Interval[outer=" + format_real(s.outer_radius) + "]";
    }
    std::string operator()(const EmptySet&) const { return "Empty"; }
  };
  return std::visit(Visitor{}, cls);
}

std::optional<AxisDegeneracy> axis_degeneracy(const HyperbolicNumber& c) {
  const auto cc = to_char(c);
  const bool x_zero = std::abs(cc.X) <= kDiagonalTolerance;
  const bool y_zero = std::abs(cc.Y) <= kDiagonalTolerance;
  if (x_zero && y_zero) return AxisDegeneracy{AxisKind::both_zero, 0.0};
  if (x_zero) return AxisDegeneracy{AxisKind::cX_zero, cc.Y};
  if (y_zero) return AxisDegeneracy{AxisKind::cY_zero, cc.X};
  return std::nullopt;
}

bool mandelbrot_member(const HyperbolicNumber& c) {
  const auto cc = to_char(c);
  if (in_closed_square_range(cc.X) && in_closed_square_range(cc.Y)) return true;
  return axis_degeneracy(c).has_value();
}

ChamberClass quadchotomy(const HyperbolicNumber& c) {
  if (auto axis = axis_degeneracy(c)) return {Chamber::AxisDegenerate, axis};

  const auto cc = to_char(c);
  const bool x_in = in_closed_square_range(cc.X);
  const bool y_in = in_closed_square_range(cc.Y);
  const bool x_cantor = cc.X < kCantorThreshold;
  const bool y_cantor = cc.Y < kCantorThreshold;

  if (x_in && y_in) return {Chamber::ConnectedNonempty, std::nullopt};
  if ((x_in && y_cantor) || (y_in && x_cantor)) return {Chamber::Disconnected, std::nullopt};
  if (x_cantor && y_cantor) return {Chamber::TotallyDisconnected, std::nullopt};
  return {Chamber::Empty, std::nullopt};
}

JuliaDescription julia_description(const HyperbolicNumber& c) {
  require_off_axis(c, "julia_description");
  const auto cc = to_char(c);
  return {classify_real(cc.X), classify_real(cc.Y), quadchotomy(c)};
}

bool julia_membership(const HyperbolicNumber& z0, const HyperbolicNumber& c, std::size_t max_iter) {
  require_off_axis(c, "julia_membership");
  const auto zc = to_char(z0);
  const auto cc = to_char(c);
  return bounded_real(zc.X, cc.X, max_iter) && bounded_real(zc.Y, cc.Y, max_iter);
}

bool julia_membership_window(const HyperbolicNumber& z0, const HyperbolicNumber& c, double half_X,
                             double half_Y, std::size_t max_iter) {
  require_off_axis(c, "julia_membership_window");
  const auto zc = to_char(z0);
  const auto cc = to_char(c);
  return bounded_real_window(zc.X - half_X, zc.X + half_X, cc.X, max_iter) &&
         bounded_real_window(zc.Y - half_Y, zc.Y + half_Y, cc.Y, max_iter);
}

AxisJulia axis_julia(const HyperbolicNumber& c) {
  const auto axis = axis_degeneracy(c);
  if (!axis) {
    throw std::invalid_argument("axis_julia: parameter is not on a characteristic axis");
  }
  if (axis->which_axis == AxisKind::both_zero) {
    // z -> z^2: each characteristic coordinate is squared, bounded iff |.| <= 1.
    return {AxisKind::both_zero, 0.0, false, 1.0, 0.0, 1.0, false};
  }
  const double cn = axis->nonaxis_c;
  if (cn > kEmptyThreshold) return {axis->which_axis, cn, true, 0.0, 0.0, 0.0, true};
  const double outer = outer_fixed_point(cn);
  const double inner = cn < kCantorThreshold ? cantor_gap_radius(cn) : 0.0;
  return {axis->which_axis, cn, false, outer, inner, 1.0, true};
}

}  // namespace hyperdyn
