#include "hyperdyn/render.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <stdexcept>
#include <string>
#include <thread>

namespace hyperdyn {
namespace {

void check_stream(const std::ostream& sink, const char* what) {
  if (!sink) throw std::ios_base::failure(std::string(what) + ": write failed");
}

template <typename Eval>
IterationGrid render_grid(const GridSpec& spec, const EscapeConfig& cfg, std::size_t workers, Eval eval) {
  spec.validate();
  cfg.validate();
  IterationGrid grid{spec, cfg, std::vector<std::uint32_t>(spec.width * spec.height, kSurvivedCount)};
  parallel_rows(spec.height, workers, [&](std::size_t j) {
    std::uint32_t* row = grid.counts.data() + j * spec.width;
    for (std::size_t i = 0; i < spec.width; ++i) {
      const EscapeResult r = eval(pixel_center(spec, i, j));
      row[i] = r.escaped_at ? static_cast<std::uint32_t>(*r.escaped_at) : kSurvivedCount;
    }
  });
  return grid;
}

}  // namespace

std::string_view frame_name(Frame f) { return f == Frame::cartesian ? "cartesian" : "characteristic"; }

void GridSpec::validate() const {
  if (!(std::isfinite(min_u) && std::isfinite(max_u) && std::isfinite(min_v) && std::isfinite(max_v))) {
    throw std::invalid_argument("grid: bounds must be finite");
  }
  if (!(max_u > min_u) || !(max_v > min_v)) {
    throw std::invalid_argument("grid: require max_u > min_u and max_v > min_v");
  }
  if (width < 1 || height < 1) throw std::invalid_argument("grid: width and height must be >= 1");
}

std::size_t IterationGrid::survived_count() const {
  return static_cast<std::size_t>(std::count(counts.begin(), counts.end(), kSurvivedCount));
}

std::size_t resolve_workers(std::size_t requested) {
  if (requested > 0) return requested;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

void parallel_rows(std::size_t rows, std::size_t workers, const std::function<void(std::size_t)>& body) {
  const std::size_t n = std::min(resolve_workers(workers), std::max<std::size_t>(rows, 1));
  if (n <= 1) {
    for (std::size_t j = 0; j < rows; ++j) body(j);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  auto work = [&] {
    for (;;) {
      if (failed.load(std::memory_order_relaxed)) return;
      const std::size_t j = next.fetch_add(1, std::memory_order_relaxed);
      if (j >= rows) return;
      try {
        body(j);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
      }
    }
  };

  {
    std::vector<std::jthread> pool;
    pool.reserve(n - 1);
    for (std::size_t t = 1; t < n; ++t) pool.emplace_back(work);
    work();
  }
  if (first_error) std::rethrow_exception(first_error);
}

HyperbolicNumber pixel_center(const GridSpec& spec, std::size_t i, std::size_t j) {
  if (i >= spec.width || j >= spec.height) throw std::out_of_range("pixel_center: index outside grid");
  const double u = spec.min_u + (static_cast<double>(i) + 0.5) * (spec.max_u - spec.min_u) /
                                    static_cast<double>(spec.width);
  const double v = spec.max_v - (static_cast<double>(j) + 0.5) * (spec.max_v - spec.min_v) /
                                    static_cast<double>(spec.height);
  return spec.frame == Frame::cartesian ? HyperbolicNumber::unchecked(u, v) : from_char(u, v);
}

IterationGrid render_mandelbrot(const GridSpec& spec, const EscapeConfig& cfg, std::size_t workers) {
  return render_grid(spec, cfg, workers, [&](const HyperbolicNumber& c) { return mandelbrot_escape(c, cfg); });
}

IterationGrid render_julia(const HyperbolicNumber& c, const GridSpec& spec, const EscapeConfig& cfg,
                           std::size_t workers) {
  return render_grid(spec, cfg, workers, [&](const HyperbolicNumber& z0) { return escape_time(z0, c, cfg); });
}

Image colorize(const IterationGrid& grid) {
  Image img{grid.spec.width, grid.spec.height, std::vector<std::uint8_t>(3 * grid.counts.size())};
  const double max_iter = static_cast<double>(grid.cfg.max_iter);
  for (std::size_t k = 0; k < grid.counts.size(); ++k) {
    std::uint8_t* px = img.rgb.data() + 3 * k;
    const std::uint32_t n = grid.counts[k];
    if (n == kSurvivedCount) {
      px[0] = 0;
      px[1] = 0;
      px[2] = 255;
      continue;
    }
    const double t = (static_cast<double>(n) - 1.0) / max_iter;
    px[0] = static_cast<std::uint8_t>(std::lround(255.0 * (1.0 - t)));
    px[1] = 0;
    px[2] = static_cast<std::uint8_t>(std::lround(255.0 * t));
  }
  return img;
}

void write_ppm(const Image& img, std::ostream& sink) {
  if (img.rgb.size() != 3 * img.width * img.height) {
    throw std::invalid_argument("write_ppm: pixel buffer does not match dimensions");
  }
  sink << "P6\n" << img.width << ' ' << img.height << "\n255\n";
  sink.write(reinterpret_cast<const char*>(img.rgb.data()), static_cast<std::streamsize>(img.rgb.size()));
  sink.flush();
  check_stream(sink, "write_ppm");
}

void write_counts(const IterationGrid& grid, std::ostream& sink) {
  sink << "i,j,count\n";
  for (std::size_t j = 0; j < grid.spec.height; ++j) {
    for (std::size_t i = 0; i < grid.spec.width; ++i) {
      sink << i << ',' << j << ',' << grid.at(i, j) << '\n';
    }
  }
  sink.flush();
  check_stream(sink, "write_counts");
}

}  // namespace hyperdyn
