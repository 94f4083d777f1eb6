#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "golomb/constructions.hpp"
#include "golomb/ruler.hpp"
#include "golomb/search.hpp"

namespace golomb {

/// One order's worth of lengths, shortest-known first. Missing values mean
/// "not computed" (optimum beyond the exact cutoff) or "does not fit in 64
/// bits" (powers of two beyond order 63).
struct BenchRow {
  std::uint64_t n = 0;
  std::uint64_t lower_bound = 0;
  std::optional<std::uint64_t> optimal;
  std::optional<std::uint64_t> pow2;
  std::uint64_t thm1 = 0;
  std::uint64_t thm1_nminus2 = 0;
  std::uint64_t thm2 = 0;

  double half_ratio() const { return static_cast<double>(thm2) / static_cast<double>(thm1); }
};

struct BenchConfig {
  std::uint64_t n_max = 2;
  std::uint64_t exact_cutoff = 9;
  unsigned parallelism = 1;
};

inline std::vector<BenchRow> compare_constructions(const BenchConfig& config) {
  if (config.n_max < 2) throw Error(ErrorKind::kOrderTooSmall, "n_max must be at least 2");
  std::vector<BenchRow> rows;
  rows.reserve(config.n_max - 1);
  for (std::uint64_t n = 2; n <= config.n_max; ++n) {
    BenchRow row;
    row.n = n;
    row.lower_bound = lower_bound(n);
    if (n <= config.exact_cutoff) {
      SearchConfig search;
      search.order = n;
      search.parallelism = config.parallelism;
      row.optimal = search_optimal(search).length;
    }
    if (n <= kMaxPowersOfTwoOrder) row.pow2 = construct_powers_of_two(n).length();
    row.thm1 = theorem1_bound(n);
    // N = n-2 degenerates to 0 at n = 2; every modulus gives (0, 1) there.
    row.thm1_nminus2 = triangular_length(n, std::max<std::uint64_t>(n - 2, 1));
    row.thm2 = theorem2_bound(n);
    rows.push_back(row);
  }
  return rows;
}

inline std::vector<BenchRow> compare_constructions(std::uint64_t n_max) {
  return compare_constructions(BenchConfig{n_max});
}

}  // namespace golomb
