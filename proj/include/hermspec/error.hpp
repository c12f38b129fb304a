#pragma once

#include <stdexcept>
#include <string>

namespace hermspec {

enum class ErrorKind {
  invalid_argument,
  parse,
  numerical,
  budget_exceeded,
};

// Single exception type for the library; the kind maps onto the C API status
// codes and the CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace hermspec
