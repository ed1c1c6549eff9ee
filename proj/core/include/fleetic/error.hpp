#pragma once

#include <stdexcept>
#include <string>

namespace fleetic {

enum class ErrorKind {
  validation,  // malformed or inconsistent input
  guard,       // solver precondition (size guard, resource limit) violated
  io,          // file system or parse failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(ErrorKind::validation, what) {}
};

class GuardError : public Error {
 public:
  explicit GuardError(const std::string& what) : Error(ErrorKind::guard, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::io, what) {}
};

/// Process exit code for an error kind: 2 validation, 3 guard, 4 I/O.
int exit_code_for(ErrorKind kind) noexcept;

}  // namespace fleetic
