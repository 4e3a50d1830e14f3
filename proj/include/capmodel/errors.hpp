#pragma once

#include <stdexcept>
#include <string>

namespace capmodel {

inline constexpr const char* kVersion = "0.1.0";

// Bad input data: malformed records, dangling references, missing files.
// The CLI maps this to exit code 1.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// A computation could not be completed on otherwise valid input
// (non-convergence, empty demand distribution, ...). CLI exit code 2.
class ComputationError : public std::runtime_error {
public:
  explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace capmodel
