#pragma once

#include <stdexcept>
#include <string>

namespace korbit {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A configured resource cap was exceeded. The message names the cap and the
/// offending size so callers can report an actionable limit.
class CapError : public Error {
public:
  CapError(std::string cap_name, std::uint64_t requested, std::uint64_t cap)
      : Error(cap_name + " cap exceeded: " + std::to_string(requested) +
              " > " + std::to_string(cap)),
        cap_name_(std::move(cap_name)) {}

  const std::string& cap_name() const noexcept { return cap_name_; }

private:
  std::string cap_name_;
};

/// Syntax or range error while parsing catalog text, with 1-based location.
class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", col " +
              std::to_string(column) + ": " + what),
        line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace korbit
