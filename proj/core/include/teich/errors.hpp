#pragma once

#include <stdexcept>
#include <string>

namespace teich {

// Invalid input or precondition failure; the CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource bound was exceeded (pathological input, not a math failure).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Thick-thin decomposition is ambiguous for the requested (eps0, eps1) window.
class GapViolation : public ValidationError {
 public:
  explicit GapViolation(const std::string& what) : ValidationError(what) {}
};

// Two markings or surfaces do not live on the same topology.
class TopologyMismatch : public ValidationError {
 public:
  explicit TopologyMismatch(const std::string& what) : ValidationError(what) {}
};

}  // namespace teich
