#ifndef LIEFAM_ERRORS_HPP
#define LIEFAM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace liefam {

// Base of every exception thrown by the library. The C API maps each
// subclass onto a status code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operand shapes do not match (matrix sizes, ambient dimensions).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Real/complex tag mismatch, or a real-only operation on a complex object.
class FieldError : public Error {
 public:
  using Error::Error;
};

// Division by zero, parameter outside the operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed text (scalars, points, documents). `path` locates the problem
// inside a JSON document when there is one.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::string path = {})
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// A required piece of data is missing (e.g. no real structure on a family).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition or claimed theorem failed on concrete data.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace liefam

#endif
