#pragma once

// Tile-parallel rasterization of parameter space (Mandelbrot) and dynamical
// space (Julia) into escape-count grids, plus PPM / CSV output.
//
// Every pixel is an independent pure evaluation written to a fixed index, so
// the output is bitwise identical for any worker count.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string_view>
#include <vector>

#include "hyperdyn/escape.hpp"
#include "hyperdyn/hypnum.hpp"

namespace hyperdyn {

enum class Frame { cartesian, characteristic };

std::string_view frame_name(Frame f);

/// Plane rectangle [min_u, max_u] x [min_v, max_v] in the chosen frame
/// (u = x or X, v = y or Y) sampled at pixel centers, row 0 at the top.
struct GridSpec {
  Frame frame = Frame::characteristic;
  double min_u = -3.0;
  double max_u = 1.25;
  double min_v = -3.0;
  double max_v = 1.25;
  std::size_t width = 800;
  std::size_t height = 800;

  void validate() const;

  double pixel_du() const noexcept { return (max_u - min_u) / static_cast<double>(width); }
  double pixel_dv() const noexcept { return (max_v - min_v) / static_cast<double>(height); }
};

/// Count value marking a pixel whose orbit survived max_iter steps.
inline constexpr std::uint32_t kSurvivedCount = 0;

struct IterationGrid {
  GridSpec spec;
  EscapeConfig cfg;
  std::vector<std::uint32_t> counts;  ///< row-major; escape step in 1..max_iter or kSurvivedCount

  std::uint32_t at(std::size_t i, std::size_t j) const { return counts[j * spec.width + i]; }
  bool survived(std::size_t i, std::size_t j) const { return at(i, j) == kSurvivedCount; }
  std::size_t survived_count() const;
};

struct Image {
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<std::uint8_t> rgb;  ///< row-major RGB triples
};

/// 0 means "all available hardware threads".
std::size_t resolve_workers(std::size_t requested);

/// Calls body(row) for every row in [0, rows) using up to `workers` threads.
/// Rows are handed out dynamically; body must only write row-local state.
/// The first exception thrown by any body is rethrown after all workers join.
void parallel_rows(std::size_t rows, std::size_t workers, const std::function<void(std::size_t)>& body);

/// Throws std::out_of_range for indices outside the grid.
HyperbolicNumber pixel_center(const GridSpec& spec, std::size_t i, std::size_t j);

IterationGrid render_mandelbrot(const GridSpec& spec, const EscapeConfig& cfg, std::size_t workers = 0);

IterationGrid render_julia(const HyperbolicNumber& c, const GridSpec& spec, const EscapeConfig& cfg,
                           std::size_t workers = 0);

/// Survived -> (0, 0, 255); escaped at n -> (255 (1 - t), 0, 255 t) with
/// t = (n - 1) / max_iter, rounded half away from zero.
Image colorize(const IterationGrid& grid);

/// Binary P6, maxval 255. Throws std::ios_base::failure if the stream fails.
void write_ppm(const Image& img, std::ostream& sink);

/// CSV "i,j,count" in (j, i) order, count 0 = survived.
void write_counts(const IterationGrid& grid, std::ostream& sink);

}  // namespace hyperdyn
