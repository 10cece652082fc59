#include "qrk/format.hpp"

#include <cstdio>
#include <cstdlib>

namespace qrk {

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kPrintDigits, x);
  return buf;
}

double round_significant(double x) { return std::strtod(format_number(x).c_str(), nullptr); }

}  // namespace qrk
