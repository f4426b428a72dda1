#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cadec {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands built over different variable orders.
struct OrderMismatchError : Error {
  using Error::Error;
};

// An operation's stated precondition does not hold.
struct PreconditionError : Error {
  using Error::Error;
};

struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

// A polynomial vanishes identically at a sample point (all coefficients with
// respect to the lifting variable are zero there).
struct NullifiedError : Error {
  std::string poly_text;
  explicit NullifiedError(const std::string& poly)
      : Error("polynomial nullified at sample point: " + poly), poly_text(poly) {}
};

// A --max-degree / --max-cells style guard tripped.
struct ResourceLimitError : Error {
  using Error::Error;
};

}  // namespace cadec
