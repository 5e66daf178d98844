#pragma once

#include <stdexcept>
#include <string>

namespace qmac {

/// Bad user input: malformed Cartan type, weight, word, or option.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical invariant failed to hold. Always a bug, never bad input.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Requested operation is outside what the library supports.
class UnsupportedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

#define QMAC_ENSURE(cond, msg)                                              \
  do {                                                                      \
    if (!(cond)) throw ::qmac::InvariantError(std::string(__func__) + ": " + \
                                              (msg));                       \
  } while (0)

}  // namespace qmac
