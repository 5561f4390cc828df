#pragma once

#include <stdexcept>
#include <string>

namespace symnet {

enum class ErrorKind {
  invalid_argument,  // bad input value or precondition violation
  incompatible,      // operands with mismatched base / precision / dimension
  unsupported,       // valid input outside what an operation handles
  guard_exceeded,    // resource guard (enumeration size, op count) tripped
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) fail(kind, what);
}

}  // namespace symnet
