#include "hyperdyn/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <ostream>
#include <variant>

namespace hyperdyn {
namespace {

constexpr std::size_t kNoLabel = std::numeric_limits<std::size_t>::max();

struct Box {
  std::size_t min_i, max_i, min_j, max_j;
};

double factor_extent(const RealBoundednessClass& cls) {
  if (const auto* s = std::get_if<CantorSet>(&cls)) return s->outer_radius;
  if (const auto* s = std::get_if<IntervalSet>(&cls)) return s->outer_radius;
  return 0.0;
}

}  // namespace

std::size_t BinaryMask::count() const {
  return static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](std::uint8_t v) { return v != 0; }));
}

BinaryMask rasterize_julia_mask(const HyperbolicNumber& c, const GridSpec& spec, const EscapeConfig& cfg,
                                MaskSource source, std::size_t workers) {
  spec.validate();
  cfg.validate();
  BinaryMask mask{spec.width, spec.height, std::vector<std::uint8_t>(spec.width * spec.height, 0)};

  if (source == MaskSource::escape) {
    const IterationGrid grid = render_julia(c, spec, cfg, workers);
    for (std::size_t k = 0; k < grid.counts.size(); ++k) mask.cells[k] = grid.counts[k] == kSurvivedCount;
    return mask;
  }

  // Surface axis parameters before any worker starts.
  (void)julia_description(c);
  double half_X = 0.5 * spec.pixel_du();
  double half_Y = 0.5 * spec.pixel_dv();
  if (spec.frame == Frame::cartesian) {
    half_X = half_Y = half_X + half_Y;
  }
  parallel_rows(spec.height, workers, [&](std::size_t j) {
    std::uint8_t* row = mask.cells.data() + j * spec.width;
    for (std::size_t i = 0; i < spec.width; ++i) {
      row[i] = julia_membership_window(pixel_center(spec, i, j), c, half_X, half_Y, cfg.max_iter);
    }
  });
  return mask;
}

ConnectivityReport flood_components(const BinaryMask& mask, ScanOrder order) {
  const std::size_t w = mask.width;
  const std::size_t h = mask.height;
  const std::size_t n = w * h;
  std::vector<std::size_t> label(n, kNoLabel);
  std::vector<std::size_t> sizes;
  std::vector<Box> boxes;
  std::deque<std::size_t> frontier;

  for (std::size_t step = 0; step < n; ++step) {
    const std::size_t seed = order == ScanOrder::forward ? step : n - 1 - step;
    if (!mask.cells[seed] || label[seed] != kNoLabel) continue;

    const std::size_t id = sizes.size();
    sizes.push_back(0);
    boxes.push_back({seed % w, seed % w, seed / w, seed / w});
    label[seed] = id;
    frontier.push_back(seed);

    while (!frontier.empty()) {
      // Forward scans grow breadth-first, reverse scans depth-first.
      std::size_t k;
      if (order == ScanOrder::forward) {
        k = frontier.front();
        frontier.pop_front();
      } else {
        k = frontier.back();
        frontier.pop_back();
      }
      const std::size_t i = k % w;
      const std::size_t j = k / w;
      ++sizes[id];
      Box& b = boxes[id];
      b.min_i = std::min(b.min_i, i);
      b.max_i = std::max(b.max_i, i);
      b.min_j = std::min(b.min_j, j);
      b.max_j = std::max(b.max_j, j);

      auto visit = [&](std::size_t nk) {
        if (mask.cells[nk] && label[nk] == kNoLabel) {
          label[nk] = id;
          frontier.push_back(nk);
        }
      };
      if (i > 0) visit(k - 1);
      if (i + 1 < w) visit(k + 1);
      if (j > 0) visit(k - w);
      if (j + 1 < h) visit(k + w);
    }
  }

  ConnectivityReport report;
  report.component_count = sizes.size();
  std::size_t members = 0;
  for (std::size_t s : sizes) members += s;
  for (const Box& b : boxes) {
    report.max_component_diameter_px =
        std::max({report.max_component_diameter_px, b.max_i - b.min_i, b.max_j - b.min_j});
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  report.component_sizes = std::move(sizes);
  if (members > 0) {
    report.largest_fraction = static_cast<double>(report.component_sizes.front()) / static_cast<double>(members);
  }
  return report;
}

Chamber empirical_chamber(const ConnectivityReport& report, std::size_t resolution) {
  if (report.component_count == 0) return Chamber::Empty;
  if (report.component_count == 1) return Chamber::ConnectedNonempty;
  if (report.max_component_diameter_px * 64 <= resolution) return Chamber::TotallyDisconnected;
  return Chamber::Disconnected;
}

GridSpec julia_viewport(const HyperbolicNumber& c, std::size_t resolution) {
  const auto cc = to_char(c);
  double extent = std::max({1.0, factor_extent(classify_real(cc.X)), factor_extent(classify_real(cc.Y))});
  extent *= 1.1;
  return {Frame::characteristic, -extent, extent, -extent, extent, resolution, resolution};
}

std::vector<HyperbolicNumber> representative_parameters() {
  return {from_char(-1.0, -1.0), from_char(-1.5, 0.1), from_char(-2.5, -1.0),
          from_char(-1.0, -2.5), from_char(-2.5, -2.5), from_char(0.5, 0.5),
          from_char(0.5, -1.0),  from_char(-1.0, 0.5),  from_char(-2.5, 0.5)};
}

bool QuadchotomyReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const ChamberCheck& c) { return c.pass; });
}

QuadchotomyReport verify_quadchotomy(std::span<const HyperbolicNumber> parameters, std::size_t resolution,
                                     const EscapeConfig& cfg, std::size_t workers) {
  QuadchotomyReport report{resolution, {}};
  for (const HyperbolicNumber& c : parameters) {
    const Chamber expected = quadchotomy(c).kind;
    const BinaryMask mask = rasterize_julia_mask(c, julia_viewport(c, resolution), cfg, MaskSource::analytic, workers);
    ConnectivityReport conn = flood_components(mask);
    const Chamber observed = empirical_chamber(conn, resolution);
    report.checks.push_back({to_char(c), expected, observed, std::move(conn), expected == observed});
  }
  return report;
}

SampleExpectation square_expectation(const CharCoords& c, double margin) {
  const double lo = kCantorThreshold;
  const double hi = kEmptyThreshold;
  if (c.X >= lo + margin && c.X <= hi - margin && c.Y >= lo + margin && c.Y <= hi - margin) {
    return SampleExpectation::must_survive;
  }
  const double dx = std::max({lo - c.X, 0.0, c.X - hi});
  const double dy = std::max({lo - c.Y, 0.0, c.Y - hi});
  if (std::hypot(dx, dy) >= margin && std::abs(c.X) >= margin && std::abs(c.Y) >= margin) {
    return SampleExpectation::must_escape;
  }
  return SampleExpectation::excluded;
}

MandelbrotSquareReport verify_mandelbrot_square(std::size_t resolution, double margin, const EscapeConfig& cfg,
                                                std::size_t workers) {
  if (!(margin > 0.0)) throw std::invalid_argument("verify_mandelbrot_square: margin must be positive");
  const GridSpec spec{Frame::characteristic, -3.0, 1.25, -3.0, 1.25, resolution, resolution};
  const IterationGrid grid = render_mandelbrot(spec, cfg, workers);

  MandelbrotSquareReport report{resolution, margin, 0, 0, 0, {}};
  for (std::size_t j = 0; j < spec.height; ++j) {
    for (std::size_t i = 0; i < spec.width; ++i) {
      const CharCoords c = to_char(pixel_center(spec, i, j));
      const SampleExpectation want = square_expectation(c, margin);
      const bool survived = grid.survived(i, j);
      switch (want) {
        case SampleExpectation::must_survive:
          ++report.inside_samples;
          break;
        case SampleExpectation::must_escape:
          ++report.outside_samples;
          break;
        case SampleExpectation::excluded:
          ++report.excluded_samples;
          continue;
      }
      if (survived != (want == SampleExpectation::must_survive)) {
        // Re-run the single sample for diagnostics; escape_time is pure.
        report.violations.push_back({c, want, escape_time(HyperbolicNumber{}, pixel_center(spec, i, j), cfg)});
      }
    }
  }
  return report;
}

void write_report(const QuadchotomyReport& report, std::ostream& out) {
  for (const ChamberCheck& check : report.checks) {
    out << (check.pass ? "PASS " : "FAIL ") << format_real(check.c.X) << ' ' << format_real(check.c.Y)
        << " expected=" << chamber_name(check.expected) << " observed=" << chamber_name(check.observed)
        << " components=" << check.connectivity.component_count << '\n';
  }
}

void write_report(const MandelbrotSquareReport& report, std::ostream& out) {
  for (const SquareViolation& v : report.violations) {
    out << "VIOLATION " << format_real(v.c.X) << ' ' << format_real(v.c.Y) << " expected="
        << (v.expected == SampleExpectation::must_survive ? "survive" : "escape") << " observed=";
    if (v.observed.escaped_at) {
      out << "escaped@" << *v.observed.escaped_at;
    } else {
      out << "survived";
    }
    out << '\n';
  }
  out << (report.pass() ? "PASS" : "FAIL") << " mandelbrot-square resolution=" << report.resolution
      << " margin=" << format_real(report.margin) << " inside=" << report.inside_samples
      << " outside=" << report.outside_samples << " excluded=" << report.excluded_samples
      << " violations=" << report.violations.size() << '\n';
}

}  // namespace hyperdyn
