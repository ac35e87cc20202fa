#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sdiam {

// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph6 input. `offset` is the byte position of the problem
// within the decoded line; `line` is the 1-based line of a multi-graph file,
// or 0 when unknown.
class decode_error : public error {
 public:
  decode_error(const std::string& what, std::size_t offset, std::size_t line = 0)
      : error(format(what, offset, line)), detail_(what), offset_(offset), line_(line) {}

  std::size_t offset() const noexcept { return offset_; }
  std::size_t line() const noexcept { return line_; }
  const std::string& detail() const noexcept { return detail_; }

  decode_error at_line(std::size_t line) const { return decode_error(detail_, offset_, line); }

 private:
  static std::string format(const std::string& what, std::size_t offset, std::size_t line) {
    std::string out = line ? "line " + std::to_string(line) + ": " : "";
    return out + what + " (at byte " + std::to_string(offset) + ")";
  }

  std::string detail_;
  std::size_t offset_;
  std::size_t line_;
};

// Argument outside the domain of an operation (bad vertex, k out of range,
// disconnected input where a connected one is required, ...).
class domain_error : public error {
 public:
  using error::error;
};

// Input is valid but exceeds what an exhaustive routine is sized for.
class capacity_error : public error {
 public:
  using error::error;
};

// Invalid family parameters passed to a generator.
class parameter_error : public error {
 public:
  using error::error;
};

// Unknown claim ids, malformed corpus descriptions.
class config_error : public error {
 public:
  using error::error;
};

class io_error : public error {
 public:
  using error::error;
};

}  // namespace sdiam
