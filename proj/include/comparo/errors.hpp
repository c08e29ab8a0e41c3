#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace comparo {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula text. Positions are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::vector<std::string> expected,
             const std::string& found);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::vector<std::string> expected_;
};

/// A desk-scale guard was exceeded (letter cap, state cap, n > 8, ...).
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Structurally broken model input or a model file that cannot be read.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Evaluation request that does not fit the model: unknown atom, unknown
/// state, semantics tag for the wrong model type.
class EvalError : public Error {
 public:
  using Error::Error;
};

}  // namespace comparo
