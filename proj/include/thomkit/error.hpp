#pragma once

#include <stdexcept>

namespace thomkit {

/// Malformed textual input (polynomial grammar, rationals, CLI payloads).
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A stated operation precondition does not hold (caps, families, windows...).
struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace thomkit
