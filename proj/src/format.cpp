#include "hyperrad/format.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace hyperrad {

std::string format_real(double x) {
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buffer[64];
  const double rounded = round_for_print(x);
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, rounded);
  if (ec != std::errc()) return "nan";
  return std::string(buffer, end);
}

double round_for_print(double x) {
  if (!std::isfinite(x)) return x;
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, x, std::chars_format::general, kPrintDigits);
  if (ec != std::errc()) return x;
  double rounded = x;
  std::from_chars(buffer, end, rounded);
  return rounded == 0.0 ? 0.0 : rounded;
}

}  // namespace hyperrad
