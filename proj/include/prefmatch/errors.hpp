#pragma once

#include <stdexcept>
#include <string>

namespace prefmatch {

/// Invalid input data: bad instance text, a matching that is not a matching,
/// inconsistent arguments. Maps to CLI exit code 2.
class ValidationError : public std::runtime_error {
  public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// ValidationError raised while reading a text file, carrying the 1-based
/// line number the problem was found on.
class ParseError : public ValidationError {
  public:
    ParseError(int line, const std::string& msg)
        : ValidationError("line " + std::to_string(line) + ": " + msg), line_(line) {}

    int line() const { return line_; }

  private:
    int line_;
};

/// A perfect matching was requested but none exists. Maps to CLI exit code 3.
class InfeasiblePerfect : public std::runtime_error {
  public:
    explicit InfeasiblePerfect(const std::string& msg) : std::runtime_error(msg) {}
};

/// The brute-force oracle was asked to enumerate an instance above its cap.
/// Maps to CLI exit code 3.
class InstanceTooLarge : public std::runtime_error {
  public:
    explicit InstanceTooLarge(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace prefmatch
