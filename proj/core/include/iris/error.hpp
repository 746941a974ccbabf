#pragma once

#include <stdexcept>
#include <string>

namespace iris {

// Failure classes. The CLI maps each one to a distinct exit code.
enum class ErrorKind {
  input,           // malformed input, bad arguments, unmet preconditions
  validation,      // an exponent matrix failed (or skipped) certification
  resource_guard,  // a dimension, enumeration, grid or bit cap was exceeded
};

class IrisError : public std::runtime_error {
 public:
  IrisError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail_input(const std::string& what) {
  throw IrisError(ErrorKind::input, what);
}

[[noreturn]] inline void fail_guard(const std::string& what) {
  throw IrisError(ErrorKind::resource_guard, what);
}

}  // namespace iris
