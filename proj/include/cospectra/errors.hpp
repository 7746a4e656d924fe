#pragma once

#include <stdexcept>
#include <string>

namespace cospectra {

// Typed failures so callers (and the CLI exit-code mapping) can tell input
// problems apart from resource limits.

struct SizeLimitExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidKey : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidParameter : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct RepresentationMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct FiniteInput : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NotCataloged : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct InvalidWord : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonPeriodic : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Raised when a numeric audit cannot reach its required tolerance.
struct ToleranceFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace cospectra
