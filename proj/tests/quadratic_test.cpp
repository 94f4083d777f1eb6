#include <gtest/gtest.h>

#include <map>
#include <vector>

#include "golomb/quadratic.hpp"

namespace golomb {
namespace {

using Seq = std::vector<std::int64_t>;

// Direct evaluation of a(i-1)^2 + b*n*(i-1) + c*(i-1), 1-based i.
std::int64_t oracle_mark(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t n, std::int64_t i) {
  return a * (i - 1) * (i - 1) + b * n * (i - 1) + c * (i - 1);
}

ErrorKind kind_of(const QuadraticFamilyParams& p) {
  try {
    find_quadratic_collision(p);
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::kInternalInconsistency;
}

std::string message_of(const QuadraticFamilyParams& p) {
  try {
    find_quadratic_collision(p);
  } catch (const Error& e) {
    return e.detail();
  }
  return {};
}

TEST(QuadraticRuler, Examples) {
  const Seq twelve = quadratic_ruler({1, 1, 0}, 12);
  ASSERT_EQ(twelve.size(), 12u);
  EXPECT_EQ(Seq(twelve.begin(), twelve.begin() + 6), (Seq{0, 13, 28, 45, 64, 85}));
  EXPECT_EQ(twelve[9], 189);
  EXPECT_EQ(twelve[11], 253);

  EXPECT_EQ(quadratic_ruler({1, 1, 0}, 3), (Seq{0, 4, 10}));

  const Seq fourteen = quadratic_ruler({-1, 3, 0}, 14);
  EXPECT_EQ(Seq(fourteen.begin(), fourteen.begin() + 4), (Seq{0, 41, 80, 117}));
  EXPECT_EQ(fourteen[9], 297);
  EXPECT_EQ(fourteen[13], 377);

  EXPECT_THROW(quadratic_ruler({1, 1, 0}, 2), Error);
}

TEST(QuadraticCollision, Examples) {
  const auto w = find_quadratic_collision({1, 1, 0});
  EXPECT_EQ(w.n, 12u);
  EXPECT_EQ(w.first, (TrianglePos{11, 2}));
  EXPECT_EQ(w.second, (TrianglePos{4, 4}));
  EXPECT_EQ(w.value, 64);

  const auto v = find_quadratic_collision({-1, 3, 0});
  EXPECT_EQ(v.n, 14u);
  EXPECT_EQ(v.first, (TrianglePos{13, 4}));
  EXPECT_EQ(v.second, (TrianglePos{2, 2}));
  EXPECT_EQ(v.value, 80);
}

TEST(QuadraticCollision, NamesViolatedConstraint) {
  EXPECT_EQ(kind_of({0, 1, 0}), ErrorKind::kInvalidParams);
  EXPECT_EQ(message_of({0, 1, 0}), "constraint violated: a must be nonzero");
  EXPECT_EQ(message_of({1, 0, 0}), "constraint violated: b must be positive");
  EXPECT_EQ(message_of({1, -2, 0}), "constraint violated: b must be positive");
  EXPECT_EQ(message_of({1, 1, -3}), "constraint violated: c must exceed -a-2b");
  EXPECT_EQ(message_of({-2, 3, 10}), "constraint violated: 2a+b must be positive");
}

TEST(QuadraticCollision, OverflowIsReported) {
  EXPECT_EQ(kind_of({std::int64_t{1} << 40, 1, 0}), ErrorKind::kOverflow);
}

// Every admissible (a, b, c) in a small grid: the witness is in range, the two
// entries agree when recomputed from scratch, and a brute-force scan of the
// whole triangle at that order confirms a duplicate.
TEST(QuadraticCollision, Grid) {
  int cases = 0;
  for (std::int64_t a = -3; a <= 3; ++a) {
    if (a == 0) continue;
    for (std::int64_t b = 1; b <= 4; ++b) {
      if (2 * a + b <= 0) continue;
      for (std::int64_t c = -a - 2 * b + 1; c <= -a - 2 * b + 6; ++c) {
        const auto w = find_quadratic_collision({a, b, c});
        const auto n = static_cast<std::int64_t>(w.n);
        ASSERT_EQ(n, 2 * a * a + b * b + 2 * a * b + 2 * a + 3 * b + 2 + c);
        ASSERT_EQ(w.first.i, w.n - 1);
        ASSERT_EQ(w.first.j, static_cast<std::size_t>(b + 1));
        ASSERT_EQ(w.second.i, static_cast<std::size_t>(2 * a + b + 1));
        ASSERT_EQ(w.second.j, w.second.i);
        ASSERT_GE(w.first.j, 1u);
        ASSERT_LT(w.first.j, w.n - 1);
        ASSERT_GE(w.second.j, 1u);
        ASSERT_LT(w.second.j, w.n - 1);

        const auto x = [&](std::size_t i) { return oracle_mark(a, b, c, n, static_cast<std::int64_t>(i)); };
        const std::int64_t first = x(w.first.i + 1) - x(w.first.i + 1 - w.first.j);
        const std::int64_t second = x(w.second.i + 1) - x(w.second.i + 1 - w.second.j);
        ASSERT_EQ(first, second);
        ASSERT_EQ(first, w.value);

        std::map<std::int64_t, int> counts;
        for (std::int64_t i = 1; i < n; ++i)
          for (std::int64_t j = 1; j <= i; ++j) ++counts[x(i + 1) - x(i + 1 - j)];
        ASSERT_GE(counts[w.value], 2) << a << "," << b << "," << c;
        ++cases;
      }
    }
  }
  EXPECT_EQ(cases, 84);
}

}  // namespace
}  // namespace golomb
