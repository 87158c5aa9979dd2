#pragma once

#include <stdexcept>
#include <string>

namespace apw {

// Malformed word text, unknown generator symbol, exponent out of range.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Hamming distance requested on words of different letter count.
class LengthMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Checked exponent / length arithmetic left the int64 range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// An enumeration or search would exceed its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace apw
