#pragma once

#include <stdexcept>
#include <string>

namespace a2d {

// Malformed arguments: shape mismatches, role mismatches, out-of-range bounds.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// A requested computation exceeds the configured size limits.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace a2d
