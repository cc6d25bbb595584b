#pragma once

#include <stdexcept>
#include <string>

namespace hqgeo {

enum class ErrorKind {
  Domain,      // input outside the mathematical domain (zero quaternion, characteristic point, ...)
  Parameter,   // malformed parameter (non-unit rotation, non-positive L, ...)
  Input,       // structurally invalid input (missing velocities, mismatched start point)
  OutOfRange,  // target not covered by the first geodesic arc
  Evaluation,  // non-finite value produced by a user callable
  Internal,    // solver failure that the mathematics says cannot happen
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace hqgeo
