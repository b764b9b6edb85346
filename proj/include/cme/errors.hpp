#pragma once

#include <stdexcept>
#include <string>

namespace cme {

/// Unreadable or malformed input (files, JSON configs, CSV data).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally valid input that violates a semantic requirement, e.g. an
/// algorithm or bound requested for an instance outside its setting, or a
/// hardness metric on a tied mode.
class ApplicabilityError : public std::runtime_error {
 public:
  explicit ApplicabilityError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace cme
