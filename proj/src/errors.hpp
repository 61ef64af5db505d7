#pragma once

#include <stdexcept>
#include <string>

namespace mixlat {

// Raised when input text (.mlx / .mla documents, rational literals) cannot
// be parsed. `line` is 1-based; 0 means the error is not tied to a line.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::string msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg
                                    : std::move(msg)),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Raised when a structure does not meet an operation's precondition, e.g.
// running law checks on a biposet that is not a mixed lattice.
class structure_error : public std::runtime_error {
 public:
  explicit structure_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace mixlat
