#pragma once

#include <stdexcept>
#include <string>

#define PLACEBENCH_VERSION "0.1.0"

namespace placebench {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent input files.
class ParseError : public Error {
 public:
  ParseError(const std::string& file, int line, const std::string& what)
      : Error(file + ":" + std::to_string(line) + ": " + what),
        file_(file),
        line_(line) {}
  const std::string& file() const { return file_; }
  int line() const { return line_; }

 private:
  std::string file_;
  int line_;
};

// Global white-space insertion could not reach its target.
class WhiteSpaceShortfall : public Error {
 public:
  explicit WhiteSpaceShortfall(long remaining)
      : Error("white-space insertion short by " + std::to_string(remaining) +
              " cells"),
        remaining_(remaining) {}
  long remaining() const { return remaining_; }

 private:
  long remaining_;
};

// A generated artifact failed its own optimality verification.
class CertificationError : public Error {
 public:
  explicit CertificationError(const std::string& what) : Error(what) {}
};

// Requested work exceeds a configured cap (e.g. exhaustive search size).
class LimitError : public Error {
 public:
  explicit LimitError(const std::string& what) : Error(what) {}
};

}  // namespace placebench
