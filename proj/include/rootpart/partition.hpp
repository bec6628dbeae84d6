#pragma once

// Partitions and rooted partitions. A partition is a weakly decreasing
// sequence of positive parts. A rooted partition additionally distinguishes
// one occurrence of a part value (the root), identified by the value and its
// 1-based ordinal among the equal parts. Both are immutable value types.

#include <algorithm>
#include <compare>
#include <functional>
#include <iterator>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rootpart {

class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1)
        throw std::invalid_argument("Partition: parts must be positive");
      if (i > 0 && parts_[i - 1] < parts_[i])
        throw std::invalid_argument("Partition: parts must be weakly decreasing");
      weight_ += parts_[i];
    }
  }

  static Partition from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  long long weight() const { return weight_; }

  int multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
  }

  // vacuously true for the empty partition
  bool min_part_at_least(int r) const {
    return parts_.empty() || parts_.back() >= r;
  }

  friend bool operator==(const Partition& x, const Partition& y) {
    return x.parts_ == y.parts_;
  }
  friend std::strong_ordering operator<=>(const Partition& x, const Partition& y) {
    return x.parts_ <=> y.parts_;
  }

 private:
  std::vector<int> parts_;
  long long weight_ = 0;
};

// (value, multiplicity) pairs in decreasing value order
inline std::vector<std::pair<int, int>> runs(const Partition& lambda) {
  std::vector<std::pair<int, int>> out;
  const auto& parts = lambda.parts();
  std::size_t i = 0;
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    out.emplace_back(parts[i], static_cast<int>(j - i));
    i = j;
  }
  return out;
}

// number of distinct part values occurring at least k times
inline int count_values_occurring_at_least(const Partition& lambda, int k) {
  if (k < 1)
    throw std::invalid_argument("count_values_occurring_at_least: k must be positive");
  int out = 0;
  for (const auto& [value, mult] : runs(lambda)) {
    (void)value;
    if (mult >= k) ++out;
  }
  return out;
}

class RootedPartition {
 public:
  RootedPartition(Partition base, int root_value, int root_ordinal)
      : base_(std::move(base)), root_value_(root_value), root_ordinal_(root_ordinal) {
    if (root_ordinal_ < 1 || base_.multiplicity(root_value_) < root_ordinal_)
      throw std::invalid_argument(
          "RootedPartition: no part " + std::to_string(root_value_) +
          " at ordinal " + std::to_string(root_ordinal_));
  }

  const Partition& base() const { return base_; }
  int root_value() const { return root_value_; }
  int root_ordinal() const { return root_ordinal_; }
  long long weight() const { return base_.weight(); }

  friend bool operator==(const RootedPartition&, const RootedPartition&) = default;
  friend auto operator<=>(const RootedPartition&, const RootedPartition&) = default;

 private:
  Partition base_;
  int root_value_;
  int root_ordinal_;
};

// Multiset union; equal parts from the left operand precede those from the right.
inline Partition direct_sum(const Partition& left, const Partition& right) {
  std::vector<int> merged;
  merged.reserve(left.parts().size() + right.parts().size());
  std::merge(left.parts().begin(), left.parts().end(),
             right.parts().begin(), right.parts().end(),
             std::back_inserter(merged), std::greater<int>());
  return Partition(std::move(merged));
}

// The right operand's root keeps its place after the left operand's copies of
// the same value, so its ordinal grows by left.multiplicity(root value).
inline RootedPartition direct_sum_rooted(const Partition& left, const RootedPartition& right) {
  return RootedPartition(direct_sum(left, right.base()), right.root_value(),
                         left.multiplicity(right.root_value()) + right.root_ordinal());
}

// The left operand's root is unaffected: its copies of the root value precede
// the right operand's, so the ordinal is unchanged.
inline RootedPartition direct_sum_rooted_left(const RootedPartition& left, const Partition& right) {
  return RootedPartition(direct_sum(left.base(), right),
                         left.root_value(), left.root_ordinal());
}

struct TrailingSplit {
  Partition rest;
  RootedPartition tail;
};

// tail = the root and the equal parts after it (rooted at its first part),
// rest = everything else. direct_sum_rooted(rest, tail) restores the input.
inline TrailingSplit split_trailing_root(const RootedPartition& rho) {
  const int value = rho.root_value();
  const int mult = rho.base().multiplicity(value);
  const int tail_count = mult - rho.root_ordinal() + 1;
  std::vector<int> rest;
  rest.reserve(rho.base().parts().size() - static_cast<std::size_t>(tail_count));
  int seen = 0;
  for (int part : rho.base().parts()) {
    if (part == value && ++seen >= rho.root_ordinal()) continue;
    rest.push_back(part);
  }
  return {Partition(std::move(rest)),
          RootedPartition(Partition(std::vector<int>(tail_count, value)), value, 1)};
}

struct SizeSplit {
  Partition big;
  Partition small;
};

// big = parts >= threshold, small = parts < threshold
inline SizeSplit split_small_parts(const Partition& lambda, int threshold) {
  const auto& parts = lambda.parts();
  auto cut = std::partition_point(parts.begin(), parts.end(),
                                  [&](int part) { return part >= threshold; });
  return {Partition(std::vector<int>(parts.begin(), cut)),
          Partition(std::vector<int>(cut, parts.end()))};
}

}  // namespace rootpart
