#pragma once

// Partition counting and the part-count statistic, by dynamic programming.
// The lazy enumeration in enumerate.hpp is the independent route to the same
// numbers; the test suite plays the two against each other.

#include <stdexcept>
#include <vector>

namespace rootpart {

namespace detail {

inline long long checked_add(long long a, long long b) {
  long long out;
  if (__builtin_add_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in partition arithmetic");
  return out;
}

inline long long checked_mul(long long a, long long b) {
  long long out;
  if (__builtin_mul_overflow(a, b, &out))
    throw std::overflow_error("integer overflow in partition arithmetic");
  return out;
}

}  // namespace detail

// counts[m] = number of partitions of m with every part >= min_part, for
// 0 <= m <= max_n
inline std::vector<long long> partition_count_table(int max_n, int min_part) {
  if (max_n < 0)
    throw std::invalid_argument("partition_count_table: max_n must be >= 0");
  if (min_part < 1)
    throw std::invalid_argument("partition_count_table: min_part must be >= 1");
  std::vector<long long> counts(static_cast<std::size_t>(max_n) + 1, 0);
  counts[0] = 1;
  for (int value = min_part; value <= max_n; ++value)
    for (int m = value; m <= max_n; ++m)
      counts[m] = detail::checked_add(counts[m], counts[m - value]);
  return counts;
}

inline long long count_partitions(int n, int min_part = 1) {
  if (n < 0) throw std::invalid_argument("count_partitions: n must be >= 0");
  return partition_count_table(n, min_part)[static_cast<std::size_t>(n)];
}

// Total count of parts equal to k over the partitions of n with min part
// >= r, summed as counts[n - j*k] over j >= 1: striking j copies of k from a
// partition counted with multiplicity j leaves an unrestricted witness, since
// k >= r keeps the minimum intact. Zero when k < r.
inline long long statistic_from_table(const std::vector<long long>& counts,
                                      int n, int k, int r) {
  if (n < 0 || k < 1 || r < 1)
    throw std::invalid_argument("statistic: need n >= 0, k >= 1, r >= 1");
  if (k < r) return 0;
  if (counts.size() <= static_cast<std::size_t>(n))
    throw std::invalid_argument("statistic: count table smaller than n");
  long long total = 0;
  for (int m = n - k; m >= 0; m -= k)
    total = detail::checked_add(total, counts[m]);
  return total;
}

inline long long statistic(int n, int k, int r) {
  if (n < 0 || k < 1 || r < 1)
    throw std::invalid_argument("statistic: need n >= 0, k >= 1, r >= 1");
  if (k < r) return 0;
  return statistic_from_table(partition_count_table(n, r), n, k, r);
}

struct Statistic {
  int n;
  int k;
  int r;
  long long value;
};

inline std::vector<Statistic> statistic_grid(int n, int r, int k_lo, int k_hi) {
  if (n < 0 || r < 1)
    throw std::invalid_argument("statistic_grid: need n >= 0, r >= 1");
  if (k_lo < 1 || k_hi < k_lo)
    throw std::invalid_argument("statistic_grid: need 1 <= k_lo <= k_hi");
  const auto counts = partition_count_table(n, r);
  std::vector<Statistic> grid;
  grid.reserve(static_cast<std::size_t>(k_hi - k_lo) + 1);
  for (int k = k_lo; k <= k_hi; ++k)
    grid.push_back({n, k, r, statistic_from_table(counts, n, k, r)});
  return grid;
}

}  // namespace rootpart
