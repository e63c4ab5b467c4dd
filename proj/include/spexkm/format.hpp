#pragma once

#include <cstdio>
#include <cstdlib>
#include <string>

namespace spexkm {

/// `value` rounded to `digits` significant digits (what gets printed).
inline double round_significant(double value, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

inline std::string format_significant(double value, int digits = 10) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

}  // namespace spexkm
