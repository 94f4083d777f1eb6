#pragma once

// Explicit ruler families and their closed-form lengths.
//
// The triangular family places x_i = C(i-1,2)*N + (i-1). Every column j of its
// difference triangle is congruent to j mod N, so with N = n (or n-2) columns
// never collide. Choosing N ~ n/2 by parity still works because the largest
// entry of column j stays below the smallest entry of column N+j.

#include <cstdint>
#include <vector>

#include "golomb/error.hpp"
#include "golomb/ruler.hpp"

namespace golomb {

inline constexpr std::uint64_t kMaxPowersOfTwoOrder = 63;

struct TriangularParams {
  std::uint64_t order = 2;
  std::uint64_t modulus = 1;
};

/// x_i = 2^(i-1) - 1. Graceful for every order, but exponentially long.
inline Ruler construct_powers_of_two(std::uint64_t n) {
  if (n < 1) throw Error(ErrorKind::kOrderTooSmall, "order must be at least 1");
  if (n > kMaxPowersOfTwoOrder) {
    throw Error(ErrorKind::kOrderTooLarge, "powers-of-two rulers overflow 64 bits beyond order 63");
  }
  std::vector<Mark> marks(n);
  for (std::uint64_t i = 0; i < n; ++i) marks[i] = (Mark{1} << i) - 1;
  return Ruler(std::move(marks));
}

/// Length of the triangular ruler, C(n-1,2)*N + (n-1).
inline std::uint64_t triangular_length(std::uint64_t n, std::uint64_t modulus) {
  if (n < 2) throw Error(ErrorKind::kOrderTooSmall, "order must be at least 2");
  const std::uint64_t pairs = checked::mul(n - 1, n - 2) / 2;
  return checked::add(checked::mul(pairs, modulus), n - 1);
}

/// Not graceful for arbitrary moduli; callers verify separately.
inline Ruler construct_triangular(const TriangularParams& params) {
  if (params.order < 2) throw Error(ErrorKind::kOrderTooSmall, "order must be at least 2");
  if (params.modulus < 1) throw Error(ErrorKind::kZeroModulus, "modulus must be at least 1");
  // Length bounds every mark; checking it once covers all intermediate terms.
  triangular_length(params.order, params.modulus);
  std::vector<Mark> marks(params.order);
  for (std::uint64_t k = 0; k < params.order; ++k) {
    const std::uint64_t pairs = k == 0 ? 0 : k * (k - 1) / 2;
    marks[k] = pairs * params.modulus + k;
  }
  return Ruler(std::move(marks));
}

/// Triangular family with N = n.
inline Ruler construct_cubic(std::uint64_t n) { return construct_triangular({n, n}); }

/// N = (n-1)/2 for odd n, n/2 for even n.
inline std::uint64_t half_cubic_modulus(std::uint64_t n) {
  if (n < 2) throw Error(ErrorKind::kOrderTooSmall, "order must be at least 2");
  return n % 2 == 1 ? (n - 1) / 2 : n / 2;
}

inline Ruler construct_half_cubic(std::uint64_t n) {
  return construct_triangular({n, half_cubic_modulus(n)});
}

/// (n-1)((n-1)^2 + 1)/2, the length of the N = n ruler.
inline std::uint64_t theorem1_bound(std::uint64_t n) {
  if (n < 2) throw Error(ErrorKind::kOrderTooSmall, "order must be at least 2");
  const std::uint64_t m = n - 1;
  const std::uint64_t numerator = checked::mul(m, checked::add(checked::mul(m, m), std::uint64_t{1}));
  if (numerator % 2 != 0) {
    throw Error(ErrorKind::kInternalInconsistency, "cubic bound numerator is odd");
  }
  return numerator / 2;
}

/// (n-1) + (n-1)^2(n-2)/4 for odd n, (n-1) + n(n-1)(n-2)/4 for even n.
inline std::uint64_t theorem2_bound(std::uint64_t n) {
  if (n < 2) throw Error(ErrorKind::kOrderTooSmall, "order must be at least 2");
  const std::uint64_t lead = n % 2 == 1 ? n - 1 : n;
  const std::uint64_t numerator = checked::mul(checked::mul(lead, n - 1), n - 2);
  if (numerator % 4 != 0) {
    throw Error(ErrorKind::kInternalInconsistency, "half-cubic bound numerator not divisible by 4");
  }
  return checked::add(numerator / 4, n - 1);
}

/// Column-separation condition behind the half-cubic family. With N chosen
/// by parity, the largest entry of column j, [j(n-2) - j(j-1)/2]*N + j, must
/// stay below the smallest entry of column N+j, [C(N+j,2) + 1]*N + j:
///   (N+j)(N+j-1)/2 + 1 > j(n-2) - j(j-1)/2   for every j in 1..N.
/// Evaluated exactly with both sides doubled.
inline bool check_star_inequality(std::uint64_t n) {
  const std::uint64_t modulus = half_cubic_modulus(n);
  for (std::uint64_t j = 1; j <= modulus; ++j) {
    const std::uint64_t lhs = checked::add(checked::mul(modulus + j, modulus + j - 1), std::uint64_t{2});
    const std::uint64_t positive = checked::mul(2 * j, n - 2);
    const std::uint64_t negative = j * (j - 1);
    if (positive <= negative) continue;  // right side <= 0 < left side
    if (lhs <= positive - negative) return false;
  }
  return true;
}

}  // namespace golomb
