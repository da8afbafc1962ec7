#ifndef FILIFORM_CORE_ERRORS_HPP
#define FILIFORM_CORE_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace filiform {

// Base class for every error raised by the library. Definite mathematical
// negatives (no root, not conjugate, radius exceeded) are not errors and are
// reported through return values instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t lhs, std::size_t rhs)
      : Error("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error("parse error at position " + std::to_string(position) + ": " + what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class MemoryCapExceeded : public Error {
 public:
  MemoryCapExceeded(std::size_t needed, std::size_t cap)
      : Error("memory cap exceeded: need ~" + std::to_string(needed) + " bytes, cap " +
              std::to_string(cap)),
        needed_(needed),
        cap_(cap) {}

  std::size_t needed() const noexcept { return needed_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t needed_;
  std::size_t cap_;
};

class CacheFormatError : public Error {
 public:
  using Error::Error;
};

// Raised when an internal self-check fails. Signals a bug, never a result.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace filiform

#endif  // FILIFORM_CORE_ERRORS_HPP
