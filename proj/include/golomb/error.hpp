#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace golomb {

enum class ErrorKind {
  kOrderTooSmall,
  kOrderTooLarge,
  kInvalidRuler,
  kOverflow,
  kZeroModulus,
  kInvalidParams,
  kInternalInconsistency,
  kInvalidConfig,
  kInfeasibleBound,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kOrderTooSmall: return "order-too-small";
    case ErrorKind::kOrderTooLarge: return "order-too-large";
    case ErrorKind::kInvalidRuler: return "invalid-ruler";
    case ErrorKind::kOverflow: return "overflow";
    case ErrorKind::kZeroModulus: return "zero-modulus";
    case ErrorKind::kInvalidParams: return "invalid-params";
    case ErrorKind::kInternalInconsistency: return "internal-inconsistency";
    case ErrorKind::kInvalidConfig: return "invalid-config";
    case ErrorKind::kInfeasibleBound: return "infeasible-bound";
  }
  return "unknown";
}

/// Every failure raised by the library. `kind()` is stable and intended for
/// dispatch; `what()` is a human-readable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), detail_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

// Checked arithmetic. Overflow is always reported, never wrapped.
namespace checked {

template <typename T>
T add(T a, T b) {
  T out{};
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorKind::kOverflow, "integer addition overflows");
  return out;
}

template <typename T>
T sub(T a, T b) {
  T out{};
  if (__builtin_sub_overflow(a, b, &out)) throw Error(ErrorKind::kOverflow, "integer subtraction overflows");
  return out;
}

template <typename T>
T mul(T a, T b) {
  T out{};
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorKind::kOverflow, "integer multiplication overflows");
  return out;
}

}  // namespace checked
}  // namespace golomb
