#ifndef PATHDECOMP_ERRORS_HPP
#define PATHDECOMP_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace pathdecomp {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An operation was called with inputs outside its contract
/// (non-regular graph, odd degrees, oversized oracle input, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A pipeline stage reached a state its construction rules out. Carries the
/// stage name so failures can be traced to the step that produced them.
class InternalError : public Error {
 public:
  InternalError(std::string stage, const std::string& message)
      : Error(stage + ": " + message), stage_(std::move(stage)) {}

  const std::string& stage() const noexcept { return stage_; }

 private:
  std::string stage_;
};

}  // namespace pathdecomp

#endif  // PATHDECOMP_ERRORS_HPP
