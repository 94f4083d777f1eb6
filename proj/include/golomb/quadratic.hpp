#pragma once

// Quadratic mark formulas x_i = a(i-1)^2 + b*n*(i-1) + c*(i-1) are never
// graceful once n is large enough. Terms constant in i (d*n^2 + e*n + f)
// cancel in every difference and are not represented. Rational coefficients
// reduce to integers by scaling all marks.
//
// For admissible (a, b, c) the order
//     n = 2a^2 + b^2 + 2ab + 2a + 3b + 2 + c
// forces t(n-1, b+1) == t(2a+b+1, 2a+b+1).

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "golomb/error.hpp"
#include "golomb/ruler.hpp"

namespace golomb {

struct QuadraticFamilyParams {
  std::int64_t a = 1;
  std::int64_t b = 1;
  std::int64_t c = 0;
};

struct CollisionWitness {
  std::size_t n = 0;
  TrianglePos first;   // (n-1, b+1)
  TrianglePos second;  // (2a+b+1, 2a+b+1)
  std::int64_t value = 0;
};

/// Throws kInvalidParams naming the first violated constraint.
inline void validate(const QuadraticFamilyParams& p) {
  if (p.a == 0) throw Error(ErrorKind::kInvalidParams, "constraint violated: a must be nonzero");
  if (p.b <= 0) throw Error(ErrorKind::kInvalidParams, "constraint violated: b must be positive");
  if (p.c <= checked::sub(checked::sub(std::int64_t{0}, p.a), checked::mul(std::int64_t{2}, p.b))) {
    throw Error(ErrorKind::kInvalidParams, "constraint violated: c must exceed -a-2b");
  }
  if (checked::add(checked::mul(std::int64_t{2}, p.a), p.b) <= 0) {
    throw Error(ErrorKind::kInvalidParams, "constraint violated: 2a+b must be positive");
  }
}

/// x_{k+1} = a*k^2 + (b*n + c)*k at order n.
inline std::int64_t quadratic_mark(const QuadraticFamilyParams& p, std::int64_t n, std::int64_t k) {
  const std::int64_t linear = checked::add(checked::mul(p.b, n), p.c);
  return checked::add(checked::mul(p.a, checked::mul(k, k)), checked::mul(linear, k));
}

/// Raw sequence x_1..x_n; may be non-monotone for a < 0.
inline std::vector<std::int64_t> quadratic_ruler(const QuadraticFamilyParams& p, std::size_t n) {
  if (n < 3) throw Error(ErrorKind::kOrderTooSmall, "quadratic sequences need order at least 3");
  std::vector<std::int64_t> x(n);
  for (std::size_t k = 0; k < n; ++k) {
    x[k] = quadratic_mark(p, static_cast<std::int64_t>(n), static_cast<std::int64_t>(k));
  }
  return x;
}

/// t(i,j) = x_{i+1} - x_{i+1-j} over a raw (signed) sequence.
inline std::int64_t triangle_entry(const std::vector<std::int64_t>& x, TrianglePos pos) {
  if (pos.j < 1 || pos.j > pos.i || pos.i + 1 > x.size()) {
    throw std::out_of_range("triangle position out of range");
  }
  return checked::sub(x[pos.i], x[pos.i - pos.j]);
}

/// Order at which the family is forced to repeat a difference.
inline std::int64_t collision_order(const QuadraticFamilyParams& p) {
  using checked::add;
  using checked::mul;
  const std::int64_t a = p.a, b = p.b;
  std::int64_t n = mul(std::int64_t{2}, mul(a, a));
  n = add(n, mul(b, b));
  n = add(n, mul(std::int64_t{2}, mul(a, b)));
  n = add(n, mul(std::int64_t{2}, a));
  n = add(n, mul(std::int64_t{3}, b));
  n = add(n, std::int64_t{2});
  return add(n, p.c);
}

inline CollisionWitness find_quadratic_collision(const QuadraticFamilyParams& p) {
  validate(p);
  const std::int64_t n = collision_order(p);
  const std::int64_t i1 = n - 1;
  const std::int64_t j1 = checked::add(p.b, std::int64_t{1});
  const std::int64_t j2 = checked::add(checked::add(checked::mul(std::int64_t{2}, p.a), p.b), std::int64_t{1});
  if (!(j1 >= 1 && j1 < i1) || !(j2 >= 1 && j2 < i1)) {
    throw Error(ErrorKind::kInternalInconsistency,
                "collision columns out of range for n = " + std::to_string(n));
  }

  CollisionWitness w;
  w.n = static_cast<std::size_t>(n);
  w.first = {static_cast<std::size_t>(i1), static_cast<std::size_t>(j1)};
  w.second = {static_cast<std::size_t>(j2), static_cast<std::size_t>(j2)};

  // Only four marks are involved; evaluate them directly rather than
  // materialising an order-n sequence.
  const auto mark = [&](std::int64_t k) { return quadratic_mark(p, n, k); };
  const std::int64_t lhs = checked::sub(mark(i1), mark(i1 - j1));
  const std::int64_t rhs = checked::sub(mark(j2), mark(0));
  if (lhs != rhs) {
    throw Error(ErrorKind::kInternalInconsistency,
                "entries differ: " + std::to_string(lhs) + " vs " + std::to_string(rhs));
  }
  w.value = lhs;
  return w;
}

}  // namespace golomb
