#pragma once

#include <stdexcept>
#include <string>

namespace eegdwt {

// Precondition violated by a caller-supplied argument (bad rating, unknown
// channel, wrong vector length, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed or inconsistent data on disk or on the wire.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numerical failure at run time, e.g. the SVM solver ran out of passes.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eegdwt
