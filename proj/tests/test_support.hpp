#pragma once

// Test-only oracles and generators. Nothing here calls into the code paths
// it is used to check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "golomb/ruler.hpp"

namespace golomb::testing {

/// Random ruler with `n` marks drawn from [0, max_mark], always containing 0.
inline Ruler random_ruler(std::mt19937_64& rng, std::size_t n, Mark max_mark) {
  std::set<Mark> marks{0};
  std::uniform_int_distribution<Mark> pick(1, max_mark);
  while (marks.size() < n) marks.insert(pick(rng));
  return Ruler(std::vector<Mark>(marks.begin(), marks.end()));
}

/// Multiset of |x_i - x_j|; graceful iff no multiplicity exceeds one.
inline bool brute_force_graceful(const std::vector<Mark>& x) {
  std::map<Mark, int> counts;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) ++counts[x[j] > x[i] ? x[j] - x[i] : x[i] - x[j]];
  return std::all_of(counts.begin(), counts.end(), [](const auto& kv) { return kv.second == 1; });
}

/// Lexicographically first (value, i1, j1, i2, j2) duplicate found by
/// comparing every pair of triangle positions.
inline std::optional<std::tuple<Mark, std::size_t, std::size_t, std::size_t, std::size_t>> brute_force_witness(
    const std::vector<Mark>& x) {
  struct Entry {
    std::size_t i, j;
    Mark v;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 1; i < x.size(); ++i)
    for (std::size_t j = 1; j <= i; ++j) entries.push_back({i, j, x[i] - x[i - j]});
  std::optional<std::tuple<Mark, std::size_t, std::size_t, std::size_t, std::size_t>> best;
  for (std::size_t a = 0; a < entries.size(); ++a) {
    for (std::size_t b = 0; b < entries.size(); ++b) {
      if (a == b || entries[a].v != entries[b].v) continue;
      const auto& p = entries[a];
      const auto& q = entries[b];
      if (std::tie(p.i, p.j) > std::tie(q.i, q.j)) continue;
      auto cand = std::make_tuple(p.v, p.i, p.j, q.i, q.j);
      if (!best || cand < *best) best = cand;
    }
  }
  return best;
}

inline std::vector<Mark> to_vector(const Ruler& r) { return {r.marks().begin(), r.marks().end()}; }

}  // namespace golomb::testing
