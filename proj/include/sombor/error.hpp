#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sombor {

// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid arguments: out-of-range vertices, self-loops, bad family params.
class input_error : public error {
 public:
  using error::error;
};

// Malformed graph6 or edge-list text.
class format_error : public error {
 public:
  explicit format_error(const std::string& what, std::size_t line = 0)
      : error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed input that this library deliberately does not handle (sparse6, huge n).
class unsupported_error : public error {
 public:
  using error::error;
};

// Operation undefined on this value (e.g. degree points of an edgeless graph).
class domain_error : public error {
 public:
  using error::error;
};

class io_error : public error {
 public:
  using error::error;
};

}  // namespace sombor
