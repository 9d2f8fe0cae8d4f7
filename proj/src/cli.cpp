#include "hyperdyn/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <system_error>
#include <utility>

#include "hyperdyn/classify.hpp"
#include "hyperdyn/escape.hpp"
#include "hyperdyn/oracle.hpp"
#include "hyperdyn/render.hpp"

namespace hyperdyn::cli {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ViewOptions {
  std::string frame = "characteristic";
  double min_u = -3.0;
  double max_u = 1.25;
  double min_v = -3.0;
  double max_v = 1.25;
  std::size_t width = 800;
  std::size_t height = 800;
  std::size_t max_iter = 200;
  double bound = 4.0;
  std::string out;
  std::string counts;
  std::size_t workers = 0;

  GridSpec grid() const {
    GridSpec spec{frame == "cartesian" ? Frame::cartesian : Frame::characteristic,
                  min_u, max_u, min_v, max_v, width, height};
    try {
      spec.validate();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    return spec;
  }

  EscapeConfig escape() const { return {max_iter, bound}; }
};

struct ParamOptions {
  std::optional<double> c_re;
  std::optional<double> c_im;
  std::optional<std::string> c_char;
};

double parse_real(std::string_view text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || !std::isfinite(v)) {
    throw UsageError("not a finite number: '" + std::string(text) + "'");
  }
  return v;
}

CharCoords parse_char_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
    throw UsageError("--c-char expects X,Y, got '" + text + "'");
  }
  return {parse_real(std::string_view(text).substr(0, comma)),
          parse_real(std::string_view(text).substr(comma + 1))};
}

HyperbolicNumber resolve_param(const ParamOptions& p) {
  const bool cartesian = p.c_re.has_value() || p.c_im.has_value();
  if (cartesian && p.c_char) throw UsageError("give either --c-re/--c-im or --c-char, not both");
  if (p.c_char) return from_char(parse_char_pair(*p.c_char));
  if (!(p.c_re && p.c_im)) throw UsageError("parameter required: --c-re R --c-im I, or --c-char X,Y");
  return HyperbolicNumber(*p.c_re, *p.c_im);
}

void add_view_options(CLI::App* sub, ViewOptions& v) {
  sub->add_option("--frame", v.frame, "Coordinate frame of the viewport")
      ->check(CLI::IsMember({"cartesian", "characteristic"}))
      ->capture_default_str();
  sub->add_option("--min-u", v.min_u, "Viewport lower bound, first axis (x or X)")->capture_default_str();
  sub->add_option("--max-u", v.max_u, "Viewport upper bound, first axis")->capture_default_str();
  sub->add_option("--min-v", v.min_v, "Viewport lower bound, second axis (y or Y)")->capture_default_str();
  sub->add_option("--max-v", v.max_v, "Viewport upper bound, second axis")->capture_default_str();
  sub->add_option("--width", v.width, "Image width in pixels")->check(CLI::Range(1, 1 << 16))->capture_default_str();
  sub->add_option("--height", v.height, "Image height in pixels")->check(CLI::Range(1, 1 << 16))->capture_default_str();
  sub->add_option("--max-iter", v.max_iter, "Iteration limit")->check(CLI::Range(1, 1 << 30))->capture_default_str();
  sub->add_option("--bound", v.bound, "Escape bound on |z conj(z)|")->check(CLI::PositiveNumber)->capture_default_str();
  sub->add_option("--out", v.out, "Output PPM path ('-' for stdout)");
  sub->add_option("--counts", v.counts, "Optional iteration-count CSV path");
  sub->add_option("--workers", v.workers, "Worker threads (0 = all available)")->check(CLI::Range(0, 4096));
}

void add_param_options(CLI::App* sub, ParamOptions& p) {
  sub->add_option("--c-re", p.c_re, "Parameter c, real part c1");
  sub->add_option("--c-im", p.c_im, "Parameter c, tau part c2");
  sub->add_option("--c-char", p.c_char, "Parameter c in characteristic coordinates, X,Y");
}

template <typename Writer>
void write_output(const std::string& path, std::ostream& stdout_stream, Writer&& writer) {
  if (path == "-") {
    writer(stdout_stream);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  try {
    writer(file);
  } catch (const std::ios_base::failure&) {
    throw IoError("write to '" + path + "' failed");
  }
}

void emit_render(const IterationGrid& grid, const ViewOptions& v, std::ostream& out) {
  write_output(v.out, out, [&](std::ostream& s) { write_ppm(colorize(grid), s); });
  if (!v.counts.empty()) {
    write_output(v.counts, out, [&](std::ostream& s) { write_counts(grid, s); });
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::pair<std::string, std::string>> read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  std::vector<std::pair<std::string, std::string>> entries;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body = line;
    if (const auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    body = trim(body);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw UsageError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
    }
    std::string key(trim(body.substr(0, eq)));
    std::string value(trim(body.substr(eq + 1)));
    if (key.empty()) throw UsageError(path + ":" + std::to_string(lineno) + ": empty key");
    entries.emplace_back(std::move(key), std::move(value));
  }
  return entries;
}

/// Pulls `--config PATH` / `--config=PATH` out of the arguments.
std::optional<std::string> extract_config(std::vector<std::string>& args) {
  std::optional<std::string> path;
  for (std::size_t k = 0; k < args.size();) {
    if (args[k] == "--config") {
      if (k + 1 >= args.size()) throw UsageError("--config requires a path");
      path = args[k + 1];
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(k), args.begin() + static_cast<std::ptrdiff_t>(k + 2));
    } else if (args[k].rfind("--config=", 0) == 0) {
      path = args[k].substr(9);
      args.erase(args.begin() + static_cast<std::ptrdiff_t>(k));
    } else {
      ++k;
    }
  }
  return path;
}

std::string classify_line(const HyperbolicNumber& c) {
  const CharCoords cc = to_char(c);
  const ChamberClass chamber = quadchotomy(c);
  std::string line = "c_char=" + format_real(cc.X) + "," + format_real(cc.Y);
  line += " mandelbrot=";
  line += mandelbrot_member(c) ? "true" : "false";
  line += " chamber=";
  line += chamber_name(chamber.kind);
  line += " factor_X=" + describe(classify_real(cc.X));
  line += " factor_Y=" + describe(classify_real(cc.Y));
  return line;
}

void write_orbit_csv(const std::vector<HyperbolicNumber>& orbit, std::ostream& out) {
  out << "n,x,y,X,Y,norm\n";
  for (std::size_t n = 0; n < orbit.size(); ++n) {
    const HyperbolicNumber& z = orbit[n];
    out << n << ',';
    if (!z.is_finite()) {
      out << "inf,inf,inf,inf,inf\n";
      continue;
    }
    const CharCoords cc = to_char(z);
    out << format_real(z.x()) << ',' << format_real(z.y()) << ',' << format_real(cc.X) << ','
        << format_real(cc.Y) << ',' << format_real(quad_form(z)) << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& input_args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadratic dynamics over the hyperbolic numbers", "hypdyn"};
  app.require_subcommand(1, 1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  ViewOptions mandel_view;
  auto* mandel = app.add_subcommand("mandelbrot", "Render the hyperbolic Mandelbrot set");
  add_view_options(mandel, mandel_view);

  ViewOptions julia_view;
  julia_view.min_u = julia_view.min_v = -2.5;
  julia_view.max_u = julia_view.max_v = 2.5;
  ParamOptions julia_param;
  auto* julia = app.add_subcommand("julia", "Render a filled Julia set for z^2 + c");
  add_view_options(julia, julia_view);
  add_param_options(julia, julia_param);

  ParamOptions classify_param;
  auto* classify = app.add_subcommand("classify", "Analytic Mandelbrot membership and chamber of c");
  add_param_options(classify, classify_param);

  ParamOptions orbit_param;
  double z0_re = 0.0;
  double z0_im = 0.0;
  std::size_t steps = 10;
  auto* orbit = app.add_subcommand("orbit", "Print an orbit of z^2 + c as CSV");
  orbit->add_option("--z0-re", z0_re, "Seed, real part")->capture_default_str();
  orbit->add_option("--z0-im", z0_im, "Seed, tau part")->capture_default_str();
  orbit->add_option("--steps", steps, "Number of steps")->check(CLI::Range(0, 1 << 24))->capture_default_str();
  add_param_options(orbit, orbit_param);

  std::string suite = "all";
  std::size_t resolution = 512;
  double margin = 0.05;
  std::size_t verify_iter = 200;
  double verify_bound = 4.0;
  std::size_t verify_workers = 0;
  auto* verify = app.add_subcommand("verify", "Cross-check the analytic results against escape-time iteration");
  verify->add_option("--suite", suite, "mandelbrot | quadchotomy | all")
      ->check(CLI::IsMember({"mandelbrot", "quadchotomy", "all"}))
      ->capture_default_str();
  verify->add_option("--resolution", resolution, "Grid side length")->check(CLI::Range(1, 1 << 14))->capture_default_str();
  verify->add_option("--margin", margin, "Distance kept from walls and axes")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--max-iter", verify_iter, "Iteration limit")->check(CLI::Range(1, 1 << 30))->capture_default_str();
  verify->add_option("--bound", verify_bound, "Escape bound")->check(CLI::PositiveNumber)->capture_default_str();
  verify->add_option("--workers", verify_workers, "Worker threads (0 = all available)")->check(CLI::Range(0, 4096));

  try {
    std::vector<std::string> args = input_args;
    if (const auto config_path = extract_config(args)) {
      if (args.empty()) throw UsageError("--config must follow a subcommand");
      CLI::App* sub = app.get_subcommand_no_throw(args.front());
      if (sub == nullptr) throw UsageError("unknown subcommand '" + args.front() + "'");
      std::vector<std::string> injected;
      for (const auto& [key, value] : read_config(*config_path)) {
        if (sub->get_option_no_throw("--" + key) == nullptr) {
          throw UsageError("unknown config key '" + key + "' for " + args.front());
        }
        injected.push_back("--" + key + "=" + value);
      }
      args.insert(args.begin() + 1, injected.begin(), injected.end());
    }
    std::reverse(args.begin(), args.end());
    app.parse(args);

    if (mandel->parsed()) {
      if (mandel_view.out.empty()) throw UsageError("--out is required");
      const GridSpec spec = mandel_view.grid();
      emit_render(render_mandelbrot(spec, mandel_view.escape(), mandel_view.workers), mandel_view, out);
    } else if (julia->parsed()) {
      const HyperbolicNumber c = resolve_param(julia_param);
      if (julia_view.out.empty()) throw UsageError("--out is required");
      const GridSpec spec = julia_view.grid();
      emit_render(render_julia(c, spec, julia_view.escape(), julia_view.workers), julia_view, out);
    } else if (classify->parsed()) {
      out << classify_line(resolve_param(classify_param)) << '\n';
    } else if (orbit->parsed()) {
      const HyperbolicNumber c = resolve_param(orbit_param);
      write_orbit_csv(hyper_orbit(HyperbolicNumber(z0_re, z0_im), c, steps), out);
    } else if (verify->parsed()) {
      const EscapeConfig cfg{verify_iter, verify_bound};
      bool pass = true;
      if (suite == "mandelbrot" || suite == "all") {
        const auto report = verify_mandelbrot_square(resolution, margin, cfg, verify_workers);
        write_report(report, out);
        pass = pass && report.pass();
      }
      if (suite == "quadchotomy" || suite == "all") {
        const auto params = representative_parameters();
        const auto report = verify_quadchotomy(params, resolution, cfg, verify_workers);
        write_report(report, out);
        pass = pass && report.all_pass();
      }
      out.flush();
      return pass ? kExitOk : kExitFailure;
    }
    out.flush();
    return kExitOk;
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace hyperdyn::cli
