#pragma once

#include <stdexcept>
#include <string>

namespace landau {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A physical or index argument lies outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A weight table was used with the wrong band content, or an unsupported
/// level offset was requested from it.
class WeightTableError : public Error {
 public:
  using Error::Error;
};

/// Series analysis could not produce a result (too few samples, no
/// crossings, inconsistent estimates, ...).
class AnalysisError : public Error {
 public:
  using Error::Error;
};

/// Invalid run configuration (bad key, unparsable value, failed validation).
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace landau
