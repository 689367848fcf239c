#ifndef HARDY_ERROR_HPP
#define HARDY_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hardy {

/// Precondition or input validation failure (bad curve, exponent, config).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical invariant was violated at run time.
class NumericalFault : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline void require(bool condition, const std::string& message) {
  if (!condition) throw ValidationError(message);
}

}  // namespace detail
}  // namespace hardy

#endif  // HARDY_ERROR_HPP
