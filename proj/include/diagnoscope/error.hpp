#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace diagnoscope {

/// Bad arguments to a construction or query (out-of-range ids, self-loops, violated family invariants).
class InvalidArgument : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input. `location` is a 1-based line number or a 0-based byte offset
/// depending on the format; what() already names it.
class FormatError : public std::runtime_error {
public:
  FormatError(const std::string& what, std::size_t location)
      : std::runtime_error(what), location_(location) {}

  std::size_t location() const noexcept { return location_; }

private:
  std::size_t location_;
};

/// A brute-force or exhaustive routine was asked to work beyond its configured cap.
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace diagnoscope
