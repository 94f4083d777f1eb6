#pragma once

// Rulers, difference triangles and gracefulness verification.
//
// Indexing follows the usual difference-triangle layout: rows i = 1..n-1,
// row i holds t(i,1)..t(i,i) with t(i,j) = x[i+1] - x[i+1-j], marks are
// x[1..n] with x[1] = 0. Only the public accessors use 1-based indices.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "golomb/error.hpp"

namespace golomb {

using Mark = std::uint64_t;

/// Strictly increasing mark sequence starting at 0.
class Ruler {
 public:
  /// Validates and takes ownership of `marks`. Throws kInvalidRuler when the
  /// sequence is empty, does not start at 0, or is not strictly increasing.
  explicit Ruler(std::vector<Mark> marks) : marks_(std::move(marks)) {
    if (marks_.empty()) throw Error(ErrorKind::kInvalidRuler, "a ruler needs at least one mark");
    if (marks_.front() != 0) throw Error(ErrorKind::kInvalidRuler, "first mark must be 0");
    for (std::size_t k = 1; k < marks_.size(); ++k) {
      if (marks_[k] <= marks_[k - 1]) {
        throw Error(ErrorKind::kInvalidRuler,
                    "marks must be strictly increasing (position " + std::to_string(k + 1) + ")");
      }
    }
  }

  std::size_t order() const noexcept { return marks_.size(); }
  Mark length() const noexcept { return marks_.back(); }
  std::span<const Mark> marks() const noexcept { return marks_; }

  /// 1-based, x(1) = 0.
  Mark x(std::size_t i) const { return marks_.at(i - 1); }

  /// Gaps reversed; same difference multiset.
  Ruler mirrored() const {
    std::vector<Mark> out(marks_.size());
    const Mark len = length();
    for (std::size_t k = 0; k < marks_.size(); ++k) out[marks_.size() - 1 - k] = len - marks_[k];
    return Ruler(std::move(out));
  }

  friend bool operator==(const Ruler&, const Ruler&) = default;
  friend auto operator<=>(const Ruler& a, const Ruler& b) { return a.marks_ <=> b.marks_; }

 private:
  std::vector<Mark> marks_;
};

inline std::ostream& operator<<(std::ostream& os, const Ruler& r) {
  bool first = true;
  for (Mark m : r.marks()) {
    if (!first) os << ' ';
    os << m;
    first = false;
  }
  return os;
}

/// Position (i, j) in a difference triangle, 1 <= j <= i.
struct TrianglePos {
  std::size_t i = 0;
  std::size_t j = 0;

  friend bool operator==(const TrianglePos&, const TrianglePos&) = default;
  friend auto operator<=>(const TrianglePos&, const TrianglePos&) = default;
};

/// Offset of t(i,j) in row-major lower-triangular storage.
constexpr std::size_t triangle_offset(std::size_t i, std::size_t j) noexcept {
  return i * (i - 1) / 2 + (j - 1);
}

/// Inverse of triangle_offset.
inline TrianglePos triangle_position(std::size_t offset) noexcept {
  std::size_t i = 1;
  while (i * (i + 1) / 2 <= offset) ++i;
  return {i, offset - i * (i - 1) / 2 + 1};
}

class DifferenceTriangle {
 public:
  DifferenceTriangle(std::size_t order, std::vector<Mark> entries)
      : order_(order), entries_(std::move(entries)) {}

  /// Number of marks of the generating ruler; there are order()-1 rows.
  std::size_t order() const noexcept { return order_; }
  std::size_t rows() const noexcept { return order_ - 1; }
  std::size_t size() const noexcept { return entries_.size(); }

  Mark at(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows() || j < 1 || j > i) {
      throw std::out_of_range("triangle position (" + std::to_string(i) + "," + std::to_string(j) +
                              ") out of range");
    }
    return entries_[triangle_offset(i, j)];
  }

  std::span<const Mark> row(std::size_t i) const {
    if (i < 1 || i > rows()) throw std::out_of_range("triangle row out of range");
    return std::span<const Mark>(entries_).subspan(triangle_offset(i, 1), i);
  }

  std::span<const Mark> entries() const noexcept { return entries_; }

 private:
  std::size_t order_;
  std::vector<Mark> entries_;
};

/// Throws kOrderTooSmall for a single-mark ruler (no rows).
inline DifferenceTriangle build_difference_triangle(const Ruler& ruler) {
  const std::size_t n = ruler.order();
  if (n < 2) throw Error(ErrorKind::kOrderTooSmall, "a difference triangle needs at least 2 marks");
  const auto x = ruler.marks();
  std::vector<Mark> entries;
  entries.reserve(n * (n - 1) / 2);
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j <= i; ++j) entries.push_back(checked::sub(x[i], x[i - j]));
  }
  return DifferenceTriangle(n, std::move(entries));
}

struct CollisionPair {
  TrianglePos first;
  TrianglePos second;
  Mark value = 0;

  friend bool operator==(const CollisionPair&, const CollisionPair&) = default;
};

struct GracefulnessReport {
  bool graceful = true;
  std::optional<CollisionPair> witness;
};

namespace detail {

// Dense presence table is used below this length, sort-and-scan above.
inline constexpr Mark kDenseVerifyLimit = Mark{1} << 24;

inline GracefulnessReport verify_dense(std::span<const Mark> x) {
  const std::size_t n = x.size();
  // 0 = unseen, otherwise triangle offset + 1 of the first occurrence.
  std::vector<std::uint32_t> first_seen(static_cast<std::size_t>(x.back()) + 1, 0);
  std::optional<CollisionPair> best;
  std::size_t offset = 0;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j <= i; ++j, ++offset) {
      const Mark d = x[i] - x[i - j];
      auto& slot = first_seen[static_cast<std::size_t>(d)];
      if (slot == 0) {
        slot = static_cast<std::uint32_t>(offset + 1);
        continue;
      }
      if (!best || d < best->value) {
        best = CollisionPair{triangle_position(slot - 1), TrianglePos{i, j}, d};
      }
    }
  }
  return {!best.has_value(), best};
}

inline GracefulnessReport verify_sorted(std::span<const Mark> x) {
  const std::size_t n = x.size();
  std::vector<Mark> diffs;
  diffs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j <= i; ++j) diffs.push_back(x[i] - x[i - j]);
  std::sort(diffs.begin(), diffs.end());
  const auto dup = std::adjacent_find(diffs.begin(), diffs.end());
  if (dup == diffs.end()) return {true, std::nullopt};

  // Recover the first two positions holding the smallest duplicated value.
  const Mark value = *dup;
  std::optional<TrianglePos> first;
  for (std::size_t i = 1; i < n; ++i) {
    for (std::size_t j = 1; j <= i; ++j) {
      if (x[i] - x[i - j] != value) continue;
      if (!first) {
        first = TrianglePos{i, j};
      } else {
        return {false, CollisionPair{*first, TrianglePos{i, j}, value}};
      }
    }
  }
  throw Error(ErrorKind::kInternalInconsistency, "duplicate difference vanished on rescan");
}

}  // namespace detail

/// Checks that all pairwise differences are distinct. On failure the witness
/// is the smallest duplicated value together with its first two positions in
/// (i, j) order.
inline GracefulnessReport verify_graceful(const Ruler& ruler) {
  const auto x = ruler.marks();
  if (x.size() < 2) return {true, std::nullopt};
  if (ruler.length() < detail::kDenseVerifyLimit) return detail::verify_dense(x);
  return detail::verify_sorted(x);
}

struct ResidueForm {
  std::uint64_t value = 0;
  std::uint64_t modulus = 1;
  std::uint64_t quotient = 0;
  std::uint64_t residue = 0;

  friend bool operator==(const ResidueForm&, const ResidueForm&) = default;
};

/// value = quotient * modulus + residue, 0 <= residue < modulus.
inline ResidueForm decompose_residue(std::uint64_t value, std::uint64_t modulus) {
  if (modulus == 0) throw Error(ErrorKind::kZeroModulus, "modulus must be positive");
  return {value, modulus, value / modulus, value % modulus};
}

/// C(n,2): a graceful ruler of order n has at least that many distinct
/// positive differences, all bounded by its length.
inline std::uint64_t lower_bound(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::kOrderTooSmall, "order must be positive");
  return checked::mul(n, n - 1) / 2;
}

}  // namespace golomb
