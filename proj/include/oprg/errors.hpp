#pragma once

#include <stdexcept>
#include <string>

namespace oprg {

// Malformed input: model JSON, element/series files, monomial strings.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// Diagram enumeration exceeded the configured cap.
struct CapExceeded : std::runtime_error {
  explicit CapExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated algebraic precondition: order/arity/signature mismatch,
// non-pointed inverse, contraction leaving the vertex-type set, ...
struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace oprg
