#pragma once

#include <string>

namespace hyperrad {

/// Digits used for every floating value the tools print.
inline constexpr int kPrintDigits = 12;

/// Shortest decimal text of x rounded to kPrintDigits significant digits.
/// Independent of the C locale.
std::string format_real(double x);

/// x rounded to kPrintDigits significant digits, so that a shortest
/// round-trip printer (as used by the JSON writer) emits at most that many.
double round_for_print(double x);

}  // namespace hyperrad
