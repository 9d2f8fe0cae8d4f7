#pragma once

// Empirical verification: rasterize filled Julia sets as binary masks,
// measure connectivity by flood fill and cross-check the analytic
// classification against brute-force escape-time iteration.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "hyperdyn/classify.hpp"
#include "hyperdyn/escape.hpp"
#include "hyperdyn/render.hpp"

namespace hyperdyn {

struct BinaryMask {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> cells;  ///< row-major, 1 = member

  bool at(std::size_t i, std::size_t j) const { return cells[j * width + i] != 0; }
  std::size_t count() const;
};

enum class MaskSource { analytic, escape };

/// analytic: pixel is set iff the characteristic-frame box covering the pixel
/// cell meets the product of the two max_iter-step real survivor sets (for a
/// cartesian grid the box is the cell's bounding box in (X, Y)). Requires an
/// off-axis parameter (throws AxisParameterError).
/// escape: pixel is set iff escape_time from the pixel center survives.
BinaryMask rasterize_julia_mask(const HyperbolicNumber& c, const GridSpec& spec, const EscapeConfig& cfg,
                                MaskSource source, std::size_t workers = 0);

struct ConnectivityReport {
  std::size_t component_count = 0;
  std::vector<std::size_t> component_sizes;  ///< descending
  double largest_fraction = 0.0;             ///< largest component / member pixels; 0 for an empty mask
  std::size_t max_component_diameter_px = 0; ///< Chebyshev extent of the widest bounding box

  friend bool operator==(const ConnectivityReport&, const ConnectivityReport&) = default;
};

enum class ScanOrder { forward, reverse };

/// 4-connected components.
ConnectivityReport flood_components(const BinaryMask& mask, ScanOrder order = ScanOrder::forward);

/// Empty for no components, ConnectedNonempty for one, TotallyDisconnected when
/// every component is at most resolution/64 pixels across, Disconnected otherwise.
Chamber empirical_chamber(const ConnectivityReport& report, std::size_t resolution);

/// Characteristic-frame square viewport covering the filled Julia set with a 10% margin.
GridSpec julia_viewport(const HyperbolicNumber& c, std::size_t resolution);

/// One representative off-wall parameter per chamber region (nine in total).
std::vector<HyperbolicNumber> representative_parameters();

struct ChamberCheck {
  CharCoords c;
  Chamber expected;
  Chamber observed;
  ConnectivityReport connectivity;
  bool pass;
};

struct QuadchotomyReport {
  std::size_t resolution = 0;
  std::vector<ChamberCheck> checks;

  bool all_pass() const;
};

QuadchotomyReport verify_quadchotomy(std::span<const HyperbolicNumber> parameters, std::size_t resolution,
                                     const EscapeConfig& cfg, std::size_t workers = 0);

enum class SampleExpectation { must_survive, must_escape, excluded };

/// Classifies a characteristic-frame parameter sample: at least `margin`
/// inside [-2, 1/4]^2 -> must_survive; at least `margin` (Euclidean) from the
/// square and from both axes -> must_escape; otherwise excluded.
SampleExpectation square_expectation(const CharCoords& c, double margin);

struct SquareViolation {
  CharCoords c;
  SampleExpectation expected;
  EscapeResult observed;
};

struct MandelbrotSquareReport {
  std::size_t resolution = 0;
  double margin = 0.0;
  std::size_t inside_samples = 0;
  std::size_t outside_samples = 0;
  std::size_t excluded_samples = 0;
  std::vector<SquareViolation> violations;

  bool pass() const { return violations.empty(); }
};

/// Samples the characteristic square [-3, 1.25]^2 at resolution^2 pixel centers.
MandelbrotSquareReport verify_mandelbrot_square(std::size_t resolution, double margin, const EscapeConfig& cfg,
                                                std::size_t workers = 0);

/// "PASS|FAIL <c_X> <c_Y> expected=<class> observed=<class> components=<n>" per parameter.
void write_report(const QuadchotomyReport& report, std::ostream& out);

/// One summary line, preceded by one line per violation.
void write_report(const MandelbrotSquareReport& report, std::ostream& out);

}  // namespace hyperdyn
