#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace htlogic {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula text. `position` is a byte offset into the input.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, std::vector<std::string> expected, const std::string& found);

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// An algebra, frame or model lacks the structure an operation requires.
class StructureError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its configured cap.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// JSON input does not follow the expected schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace htlogic
