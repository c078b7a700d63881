#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace isogeo4 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parse failure in the expression DSL. `offset` is the byte position in the
// input, `expected` names the token class the parser wanted there.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t offset, std::string expected)
      : Error(message), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

// Identifier that is not a declared variable, function or constant.
class UnknownIdentifier : public SyntaxError {
 public:
  UnknownIdentifier(const std::string& message, std::size_t offset, std::string name)
      : SyntaxError(message, offset, "identifier"), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// Evaluation outside the mathematical domain (division by zero, log of a
// non-positive value, ...). Signals instead of producing Inf/NaN.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Frenet frame undefined: vanishing first curvature or linearly dependent
// r', r'', r'''.
class DegenerateFrame : public Error {
 public:
  using Error::Error;
};

// A typed check was invoked on a marching scale of a different variant.
class WrongVariant : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Scene file violates the documented schema. `key_path` points at the
// offending key, e.g. "[curve].s_range".
class SchemaError : public Error {
 public:
  SchemaError(std::string key_path, const std::string& detail)
      : Error(key_path.empty() ? detail : key_path + ": " + detail),
        key_path_(std::move(key_path)) {}

  const std::string& key_path() const noexcept { return key_path_; }

 private:
  std::string key_path_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace isogeo4
