#include "cospectra/format.hpp"

#include <cmath>
#include <cstdio>

namespace cospectra {

std::string format_double(double v) {
  if (v == 0.0) return "0";  // normalise -0
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.15g", v);
  return buf;
}

}  // namespace cospectra
