#pragma once

// Lazy enumeration of partitions, and of their rootings at a fixed value, in
// lexicographically decreasing part-sequence order. PartitionRange(4) yields
// (4), (3,1), (2,2), (2,1,1), (1,1,1,1).

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "partition.hpp"

namespace rootpart {

namespace detail {

// Whether m is a sum of parts from [lo, hi]: some part count c must satisfy
// c*lo <= m <= c*hi, i.e. ceil(m/hi) <= floor(m/lo).
inline bool representable(int m, int lo, int hi) {
  if (m == 0) return true;
  if (hi < lo || m < lo) return false;
  return m / lo >= (m + hi - 1) / hi;
}

// Lexicographically greatest partition of n with all parts in [lo, hi], or
// nullopt when none exists. n = 0 gives the empty part list.
inline std::optional<std::vector<int>> greatest_partition(int n, int lo, int hi) {
  if (!representable(n, lo, hi)) return std::nullopt;
  std::vector<int> parts;
  int cap = hi;
  while (n > 0) {
    int q = std::min(cap, n);
    while (q >= lo && !representable(n - q, lo, q)) --q;
    if (q < lo) return std::nullopt;  // unreachable: n was representable
    parts.push_back(q);
    n -= q;
    cap = q;
  }
  return parts;
}

}  // namespace detail

class PartitionRange {
 public:
  explicit PartitionRange(int n, int min_part = 1) : n_(n), min_part_(min_part) {
    if (n_ < 0) throw std::invalid_argument("PartitionRange: n must be >= 0");
    if (min_part_ < 1) throw std::invalid_argument("PartitionRange: min_part must be >= 1");
  }

  class iterator {
   public:
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;

    iterator() = default;

    iterator(int n, int min_part) : min_part_(min_part), done_(false) {
      if (n == 0) return;  // the empty partition
      auto first = detail::greatest_partition(n, min_part_, n);
      if (first)
        parts_ = std::move(*first);
      else
        done_ = true;
    }

    Partition operator*() const { return Partition(parts_); }

    // the current part list without constructing a Partition
    const std::vector<int>& raw() const { return parts_; }

    iterator& operator++() {
      advance();
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      advance();
      return copy;
    }

    friend bool operator==(const iterator& x, const iterator& y) {
      if (x.done_ || y.done_) return x.done_ == y.done_;
      return x.parts_ == y.parts_;
    }

   private:
    // Strip the trailing minimal parts into a pool, decrement the last
    // remaining part, and refill greedily below it. Each decrement either
    // yields the next partition or feeds back into the loop.
    void advance() {
      int pool = 0;
      for (;;) {
        while (!parts_.empty() && parts_.back() == min_part_) {
          parts_.pop_back();
          pool += min_part_;
        }
        if (parts_.empty()) {
          done_ = true;
          return;
        }
        --parts_.back();
        ++pool;
        auto tail = detail::greatest_partition(pool, min_part_, parts_.back());
        if (tail) {
          parts_.insert(parts_.end(), tail->begin(), tail->end());
          return;
        }
      }
    }

    std::vector<int> parts_;
    int min_part_ = 1;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_, min_part_); }
  iterator end() const { return iterator(); }

 private:
  int n_;
  int min_part_;
};

// All rootings at value k of the partitions of n with min part >= min_part.
// Rootings of one base partition appear in ordinal order. A k below min_part
// yields an empty range.
class RootedPartitionRange {
 public:
  RootedPartitionRange(int n, int k, int min_part = 1)
      : n_(n), k_(k), min_part_(min_part) {
    if (k_ < 1) throw std::invalid_argument("RootedPartitionRange: k must be >= 1");
  }

  class iterator {
   public:
    using value_type = RootedPartition;
    using difference_type = std::ptrdiff_t;

    iterator() = default;

    iterator(PartitionRange::iterator it, int k) : it_(std::move(it)), k_(k), done_(false) {
      settle();
    }

    RootedPartition operator*() const { return RootedPartition(*it_, k_, ordinal_); }

    iterator& operator++() {
      if (++ordinal_ > mult_) {
        ++it_;
        settle();
      }
      return *this;
    }
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }

    friend bool operator==(const iterator& x, const iterator& y) {
      if (x.done_ || y.done_) return x.done_ == y.done_;
      return x.it_ == y.it_ && x.ordinal_ == y.ordinal_;
    }

   private:
    void settle() {
      for (; !(it_ == PartitionRange::iterator()); ++it_) {
        const auto& parts = it_.raw();
        mult_ = static_cast<int>(std::count(parts.begin(), parts.end(), k_));
        if (mult_ > 0) {
          ordinal_ = 1;
          return;
        }
      }
      done_ = true;
    }

    PartitionRange::iterator it_;
    int k_ = 0;
    int mult_ = 0;
    int ordinal_ = 0;
    bool done_ = true;
  };

  iterator begin() const {
    if (k_ < min_part_) return iterator();
    return iterator(PartitionRange(n_, min_part_).begin(), k_);
  }
  iterator end() const { return iterator(); }

 private:
  int n_;
  int k_;
  int min_part_;
};

}  // namespace rootpart
