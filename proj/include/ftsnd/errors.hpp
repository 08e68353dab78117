#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ftsnd {

// Caller passed arguments outside an operation's contract.
class usage_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The request is well formed, but no implemented method covers it
// (e.g. a Hadamard order outside Sylvester/Paley reach).
class not_supported_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class parse_error : public usage_error {
 public:
  parse_error(std::size_t line, const std::string& detail, const std::string& source = {})
      : usage_error((source.empty() ? "" : source + ":") + "line " + std::to_string(line) + ": " + detail),
        line_(line),
        detail_(detail) {}

  std::size_t line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

}  // namespace ftsnd
