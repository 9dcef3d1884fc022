#ifndef GE_ERRORS_HPP
#define GE_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ge {

// All library errors derive from Error and carry a stable machine-readable
// code, which the CLI forwards verbatim.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string &message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string &code() const { return code_; }

private:
  std::string code_;
};

class ParseError : public Error {
public:
  explicit ParseError(const std::string &message) : Error("parse_error", message) {}
};

class RangeError : public Error {
public:
  explicit RangeError(const std::string &message) : Error("range_error", message) {}
};

class ValidationError : public Error {
public:
  explicit ValidationError(const std::string &message) : Error("validation_error", message) {}
};

class RealizabilityError : public Error {
public:
  explicit RealizabilityError(const std::string &message)
      : Error("realizability_error", message) {}
};

class UnsupportedRankError : public Error {
public:
  explicit UnsupportedRankError(const std::string &message)
      : Error("unsupported_rank", message) {}
};

class ResourceError : public Error {
public:
  explicit ResourceError(const std::string &message) : Error("resource_error", message) {}
};

class EstimationError : public Error {
public:
  explicit EstimationError(const std::string &message) : Error("estimation_error", message) {}
};

class OverflowError : public Error {
public:
  explicit OverflowError(const std::string &message) : Error("integer_overflow", message) {}
};

using Int = std::int64_t;

// Checked 64-bit arithmetic. Word lengths stay tiny in practice, but silent
// wraparound would corrupt exact-equality tests, so overflow throws.
inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline std::uint64_t checked_add_u64(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("count overflow in addition");
  return r;
}

} // namespace ge

#endif
