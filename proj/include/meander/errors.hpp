#pragma once

#include <stdexcept>
#include <string>

namespace meander {

/// Enumeration or brute-force size exceeded the configured cap.
class SizeLimitError : public std::length_error {
 public:
  explicit SizeLimitError(const std::string& what) : std::length_error(what) {}
};

/// Ground sets or vector dimensions do not agree.
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// An even-sized argument was required.
class ParityError : public std::invalid_argument {
 public:
  explicit ParityError(const std::string& what) : std::invalid_argument(what) {}
};

/// Argument lies outside the domain of the operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// A parameter is out of its admissible range.
class RangeError : public std::out_of_range {
 public:
  explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

/// A creation operator would push a word past the truncation level.
class TruncationOverflow : public std::overflow_error {
 public:
  explicit TruncationOverflow(const std::string& what) : std::overflow_error(what) {}
};

}  // namespace meander
