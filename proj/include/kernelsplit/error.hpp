#pragma once

#include <stdexcept>
#include <string>

namespace ks {

enum class ErrorKind {
  ParseError,      // malformed group spec, cycle string, kappa assignment, ...
  BoundExceeded,   // an enumeration or search cap was hit
  InvalidInput,    // degree mismatch, non-bijective images, bad parameters
  NotNormal,
  NotCharacteristic,
  HypothesisFailed,  // a verified precondition of a structural procedure failed
  Cancelled,
  Internal,  // broken internal invariant; always a bug
};

class KsError : public std::runtime_error {
 public:
  KsError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw KsError(kind, what);
}

}  // namespace ks
