#pragma once

#include <stdexcept>
#include <string>

namespace zap {

// Base for every failure raised by the toolkit. The CLI maps ConfigError to
// exit code 2 and everything else to 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on caller-supplied parameters does not hold.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// zeta(s) requested at the pole s = 1.
class PoleError : public Error {
 public:
  using Error::Error;
};

// A numerical procedure could not certify its requested accuracy.
class ToleranceError : public Error {
 public:
  using Error::Error;
};

// Adaptive quadrature ran out of its subdivision budget.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

// A table or polynomial would exceed the configured memory cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// Exact integer arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw ConfigError(what);
}

}  // namespace zap
