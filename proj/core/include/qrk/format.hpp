#pragma once

#include <string>

namespace qrk {

/// Significant digits used for every number the tools print.
inline constexpr int kPrintDigits = 12;

/// printf("%.12g").
std::string format_number(double x);

/// `x` rounded to kPrintDigits significant digits.
double round_significant(double x);

}  // namespace qrk
