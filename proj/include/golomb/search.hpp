#pragma once

// Exact optimal ruler search.
//
// Depth-first branch and bound that places marks in increasing order. The
// half-cubic construction supplies the initial incumbent. The search tree is
// split into tasks by the first two marks after 0; tasks are numbered in
// lexicographic order and every worker shares one packed key
//     (best length << 32) | task index
// A partial ruler in task p with final-length lower bound L survives only if
// (L << 32 | p) < key. Ties at the incumbent length therefore stay alive in
// lexicographically earlier tasks, which makes the reported ruler (the
// lexicographically smallest optimal one) independent of worker timing.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "golomb/constructions.hpp"
#include "golomb/error.hpp"
#include "golomb/ruler.hpp"

namespace golomb {

struct SearchConfig {
  std::size_t order = 2;
  /// Only rulers no longer than this are considered. Defaults to the
  /// half-cubic length, which is always feasible.
  std::optional<std::uint64_t> initial_upper_bound;
  std::optional<std::chrono::nanoseconds> time_limit;
  /// Worker count; 0 means one per hardware thread.
  unsigned parallelism = 1;
};

struct SearchResult {
  Ruler ruler;
  std::uint64_t length = 0;
  /// True iff the space under the bound was exhausted.
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
  std::chrono::nanoseconds elapsed{0};
};

inline constexpr std::size_t kMaxSearchOrder = 64;

namespace detail {

class BranchAndBound {
 public:
  static constexpr std::uint64_t kNoTask = 0xFFFFFFFFull;
  static constexpr std::uint64_t kNodeQuantum = std::uint64_t{1} << 16;
  static constexpr std::uint64_t kMaxBound = 65534;

  BranchAndBound(std::size_t order, std::uint64_t bound,
                 std::optional<std::chrono::steady_clock::time_point> deadline)
      : n_(order), bound_(bound), deadline_(deadline), key_(pack(bound, kNoTask)), best_key_(key_) {}

  void run(unsigned workers) {
    if (workers <= 1) {
      work();
      return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back([this] { work(); });
  }

  bool found() const { return best_key_ != pack(bound_, kNoTask); }
  bool timed_out() const { return stop_.load(); }
  std::uint64_t nodes() const { return nodes_.load(); }
  const std::vector<Mark>& best() const { return best_marks_; }

 private:
  static constexpr std::uint64_t pack(std::uint64_t length, std::uint64_t task) {
    return (length << 32) | task;
  }

  std::uint64_t task_count() const { return n_ == 2 ? bound_ : bound_ * bound_; }

  // Smallest final length reachable once `x` sits at 0-based index k: the
  // remaining gaps are distinct and the last one is at least the first gap.
  std::uint64_t final_lower_bound(Mark x, std::size_t k, Mark first_gap) const {
    const std::uint64_t r = n_ - 1 - k;
    if (r == 0) return x;
    return x + (r - 1) * r / 2 + std::max<std::uint64_t>(r, first_gap);
  }

  bool admissible(std::uint64_t length, std::uint64_t task) const {
    return pack(length, task) < key_.load(std::memory_order_relaxed);
  }

  struct Worker {
    std::vector<Mark> marks;
    std::vector<std::uint8_t> used;
    std::uint64_t task = 0;
    std::uint64_t pending_nodes = 0;
  };

  void work() {
    Worker w;
    w.marks.assign(n_, 0);
    w.used.assign(bound_ + 1, 0);
    const std::uint64_t total = task_count();
    for (;;) {
      if (stop_.load(std::memory_order_relaxed)) break;
      const std::uint64_t t = next_task_.fetch_add(1, std::memory_order_relaxed);
      if (t >= total) break;
      run_task(w, t);
    }
    nodes_.fetch_add(w.pending_nodes);
  }

  void run_task(Worker& w, std::uint64_t t) {
    const Mark x2 = n_ == 2 ? t + 1 : t / bound_ + 1;
    const std::uint64_t task = n_ == 2 ? x2 : x2 * (bound_ + 1) + (t % bound_ + 1);
    w.task = task;
    w.marks[1] = x2;
    if (!admissible(final_lower_bound(x2, 1, x2), task)) return;
    if (n_ == 2) {
      record(w);
      return;
    }
    const Mark x3 = t % bound_ + 1;
    if (x3 <= x2 || x3 - x2 == x2) return;
    if (!admissible(final_lower_bound(x3, 2, x2), task)) return;
    w.marks[2] = x3;
    ++w.pending_nodes;
    if (n_ == 3) {
      if (x3 - x2 >= x2) record(w);
      return;
    }
    w.used[x2] = w.used[x3] = w.used[x3 - x2] = 1;
    extend(w, 3);
    w.used[x2] = w.used[x3] = w.used[x3 - x2] = 0;
  }

  void extend(Worker& w, std::size_t k) {
    const Mark first_gap = w.marks[1];
    const bool last = k + 1 == n_;
    for (Mark x = w.marks[k - 1] + 1;; ++x) {
      if (!admissible(final_lower_bound(x, k, first_gap), w.task)) return;
      if (last && x - w.marks[k - 1] < first_gap) continue;

      std::size_t m = 0;
      while (m < k && !w.used[x - w.marks[m]]) ++m;
      if (m < k) continue;

      if (++w.pending_nodes >= kNodeQuantum) flush_nodes(w);
      if (stop_.load(std::memory_order_relaxed)) return;

      w.marks[k] = x;
      if (last) {
        record(w);
        // Anything longer in this task is now dominated.
        return;
      }
      for (std::size_t q = 0; q < k; ++q) w.used[x - w.marks[q]] = 1;
      extend(w, k + 1);
      for (std::size_t q = 0; q < k; ++q) w.used[x - w.marks[q]] = 0;
    }
  }

  void flush_nodes(Worker& w) {
    nodes_.fetch_add(w.pending_nodes, std::memory_order_relaxed);
    w.pending_nodes = 0;
    if (deadline_ && std::chrono::steady_clock::now() >= *deadline_) stop_.store(true);
  }

  void record(const Worker& w) {
    const std::uint64_t candidate = pack(w.marks[n_ - 1], w.task);
    std::lock_guard lock(mutex_);
    if (candidate >= best_key_) return;
    best_key_ = candidate;
    best_marks_ = w.marks;
    key_.store(candidate, std::memory_order_relaxed);
  }

  std::size_t n_;
  std::uint64_t bound_;
  std::optional<std::chrono::steady_clock::time_point> deadline_;

  std::atomic<std::uint64_t> key_;
  std::atomic<std::uint64_t> next_task_{0};
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stop_{false};

  std::mutex mutex_;
  std::uint64_t best_key_;
  std::vector<Mark> best_marks_;
};

}  // namespace detail

/// Finds the shortest graceful ruler of the configured order; among equally
/// short rulers the lexicographically smallest mark sequence is returned, so
/// its first gap never exceeds its last gap.
///
/// On time-limit expiry the best ruler found so far is returned with
/// optimal = false (the half-cubic ruler if nothing better was reached).
/// Throws kInfeasibleBound when a supplied upper bound is exhausted without
/// finding any ruler.
inline SearchResult search_optimal(const SearchConfig& config) {
  const std::size_t n = config.order;
  if (n < 2) throw Error(ErrorKind::kOrderTooSmall, "search order must be at least 2");
  if (n > kMaxSearchOrder) {
    throw Error(ErrorKind::kOrderTooLarge, "search order must not exceed " + std::to_string(kMaxSearchOrder));
  }

  const auto start = std::chrono::steady_clock::now();
  Ruler incumbent = construct_half_cubic(n);
  std::uint64_t bound = incumbent.length();
  if (config.initial_upper_bound) {
    if (*config.initial_upper_bound < lower_bound(n)) {
      throw Error(ErrorKind::kInvalidConfig, "initial upper bound is below C(n,2)");
    }
    // The half-cubic ruler is always feasible, so larger bounds add nothing.
    bound = std::min(bound, *config.initial_upper_bound);
  }
  if (bound > detail::BranchAndBound::kMaxBound) {
    throw Error(ErrorKind::kInvalidConfig, "upper bound too large for exhaustive search");
  }

  std::optional<std::chrono::steady_clock::time_point> deadline;
  if (config.time_limit) deadline = start + *config.time_limit;

  unsigned workers = config.parallelism;
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

  detail::BranchAndBound bnb(n, bound, deadline);
  bnb.run(workers);

  const bool timed_out = bnb.timed_out();
  if (bnb.found()) {
    incumbent = Ruler(bnb.best());
  } else if (!timed_out && config.initial_upper_bound) {
    throw Error(ErrorKind::kInfeasibleBound,
                "no graceful ruler of order " + std::to_string(n) + " has length <= " + std::to_string(bound));
  }

  SearchResult result{incumbent, incumbent.length(), !timed_out, bnb.nodes(),
                      std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start)};
  return result;
}

}  // namespace golomb
