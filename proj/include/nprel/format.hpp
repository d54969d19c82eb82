#pragma once

#include <cstdio>
#include <optional>
#include <string>

namespace nprel {

/// 12 significant digits, the precision used by every table this library
/// writes.
inline std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

inline std::string format_real(const std::optional<double>& value) {
  return value ? format_real(*value) : std::string("none");
}

inline const char* format_bool(bool value) { return value ? "true" : "false"; }

}  // namespace nprel
