#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tablog {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input line. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class CycleError : public Error {
 public:
  using Error::Error;
};

class UnknownElementError : public Error {
 public:
  using Error::Error;
};

// Structurally well-formed input that violates a model invariant
// (non-total map, invalid decomposition, non-tree source, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A result that contradicts a proven property of the construction.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// Outcome of a verification: accepted, or the first violation found.
struct Verdict {
  bool accepted = true;
  std::string violation;

  static Verdict accept() { return {}; }
  static Verdict reject(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return accepted; }
};

}  // namespace tablog
