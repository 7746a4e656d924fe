#pragma once

#include <string>

namespace cospectra {

// Deterministic decimal rendering used by every CSV/JSON writer, so repeated
// runs produce byte-identical output.
std::string format_double(double v);

}  // namespace cospectra
