#pragma once

#include <stdexcept>
#include <string>

namespace cmrt {

/// Invalid mathematical input: bad discriminant, even or composite ell,
/// singular curve and the like.
class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A data file is missing, malformed, or fails re-verification.
class data_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exact identity that must hold did not (inexact division and
/// similar). Always a bug in this library, never bad input.
class internal_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cmrt
