#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dunbar {

/// Dense, 0-based node identifier used by every algorithm.
using NodeId = std::uint32_t;

/// Original node identifier as it appears in an input file.
using Label = std::int64_t;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file. `line()` is 1-based, 0 when the error is not tied to a line.
class LoadError : public Error {
 public:
  LoadError(const std::string& what, std::size_t line = 0) : Error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A metric that has no value for the given input (e.g. modularity with m = 0).
class UndefinedMetric : public Error {
 public:
  using Error::Error;
};

}  // namespace dunbar
