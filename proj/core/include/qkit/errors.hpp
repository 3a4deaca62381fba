#pragma once

#include <stdexcept>
#include <string>

namespace qkit {

/// Error raised while parsing a text input (circuit or machine program).
/// The message always starts with "line N: ".
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace qkit
