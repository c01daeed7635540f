#pragma once

#include <stdexcept>
#include <string>

namespace insep {

/// A truncated computation ran out of known coefficients.
class PrecisionExhausted : public std::runtime_error {
 public:
  explicit PrecisionExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed or unsupported input (bad document, not a field at S=0, ...).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An identity or a cross-check between routes failed.
class CheckFailure : public std::runtime_error {
 public:
  explicit CheckFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace insep
