#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ffp {

/// Base class for all library errors.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input: mismatched rings, bad arguments, violated preconditions.
class input_error : public error {
 public:
  using error::error;
};

/// Text that does not conform to the polynomial or job-file grammar.
/// `position` is a 0-based byte offset into the offending string.
class parse_error : public input_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : input_error(what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A configured resource limit was exceeded: pair queue, term count,
/// matrix size, combination search, or exponent range.
class limit_error : public error {
 public:
  using error::error;
};

}  // namespace ffp
