#pragma once

#include <stdexcept>
#include <string>

namespace diamondlab {

/// Argument outside the mathematical domain of an operation (e.g. a non-positive gain).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Node positions that make a link distance zero.
class GeometryError : public std::invalid_argument {
 public:
  explicit GeometryError(const std::string& what) : std::invalid_argument(what) {}
};

/// Invalid simulation or scene configuration.
class ConfigError : public std::invalid_argument {
 public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// Numerical failure that should be impossible for valid inputs.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace diamondlab
