#include "cospectra/config.hpp"

#include <cstdlib>
#include <string>

#include "cospectra/errors.hpp"

namespace cospectra {

RunConfig RunConfig::from_env() {
  RunConfig cfg;
  if (const char* env = std::getenv("COSPECTRA_BUDGET")) {
    long long v = 0;
    try {
      v = std::stoll(env);
    } catch (const std::logic_error&) {
      throw InvalidParameter(std::string("COSPECTRA_BUDGET is not a number: ") + env);
    }
    if (v <= 0) throw InvalidParameter("COSPECTRA_BUDGET must be positive");
    cfg.vertex_budget = v;
  }
  return cfg;
}

}  // namespace cospectra
