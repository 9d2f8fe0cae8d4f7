#include "hyperdyn/hypnum.hpp"

#include <array>
#include <charconv>

namespace hyperdyn {

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw std::runtime_error("format_real: buffer too small");
  return std::string(buf.data(), end);
}

}  // namespace hyperdyn
