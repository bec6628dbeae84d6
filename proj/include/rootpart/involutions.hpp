#pragma once

// Sign-reversing involutions on rooted partitions whose root value is square
// free. The sign of a rooted partition is moebius(root value); a plain
// partition counts as +1. Both maps trade the trailing run of the root (m
// copies of the value k, from the root on) for an equal-weight run, moving
// the smallest prime of one side onto the other, which flips the sign:
//
//   case 1 applies when pi(k) <= pi(m): the root value shrinks to k/pi(k)
//   and the run grows to m*pi(k) copies;
//   case 2 applies when pi(k) > pi(m): the root value grows to k*pi(m) and
//   the run shrinks to m/pi(m) copies.
//
// Here pi(n) is the smallest prime of n, infinite for n = 1. The two cases
// undo each other. involution_c acts on all square-free-rooted partitions;
// its fixed points are exactly those rooted at a final 1 (both smallest
// primes infinite), one per plain partition of the weight less one.
// involution_d acts on the disjoint union of plain partitions of n and
// square-free-rooted partitions of n + 2 with min part >= 2; the run of ones
// a case-1 step would create is moved across the union boundary instead
// (two ones are the weight difference), so no element is fixed.

#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "numtheory.hpp"
#include "partition.hpp"

namespace rootpart {

inline int sign_of(const SpfTable& spf, const RootedPartition& rho) {
  const int mu = spf.moebius(rho.root_value());
  if (mu == 0)
    throw std::invalid_argument("sign_of: root value " +
                                std::to_string(rho.root_value()) +
                                " is not square free");
  return mu;
}

// the canonical fixed point above lambda: append a 1 and root it there
inline RootedPartition embed_c(const Partition& lambda) {
  auto parts = lambda.parts();
  parts.push_back(1);
  return RootedPartition(Partition(std::move(parts)), 1, lambda.multiplicity(1) + 1);
}

enum class InvCase { fixed, case1, case2 };

struct InvolutionStep {
  InvCase kind;
  int root;       // k, the root value going in
  int count;      // m, parts equal to k from the root on
  int new_root;   // 0 when fixed
  int new_count;  // 0 when fixed
  RootedPartition image;
};

inline InvolutionStep involution_c_step(const SpfTable& spf, const RootedPartition& rho) {
  const int root = rho.root_value();
  if (!spf.is_squarefree(root))
    throw std::invalid_argument("involution_c: root value " + std::to_string(root) +
                                " is not square free");
  const auto split = split_trailing_root(rho);
  const int count = split.tail.base().length();
  const MinPrime pk = spf.min_prime(root);
  const MinPrime pm = spf.min_prime(count);
  if (pk.is_infinite() && pm.is_infinite())
    return {InvCase::fixed, root, count, 0, 0, rho};

  InvCase kind;
  int new_root, new_count;
  if (pk <= pm) {
    kind = InvCase::case1;
    new_root = root / pk.prime();
    new_count = count * pk.prime();
  } else {
    kind = InvCase::case2;
    new_root = root * pm.prime();
    new_count = count / pm.prime();
  }
  const RootedPartition replacement(
      Partition(std::vector<int>(new_count, new_root)), new_root, 1);
  return {kind, root, count, new_root, new_count,
          direct_sum_rooted(split.rest, replacement)};
}

inline RootedPartition involution_c(const SpfTable& spf, const RootedPartition& rho) {
  return involution_c_step(spf, rho).image;
}

// An element of the signed union: a plain partition of n, or a square-free-
// rooted partition of n + 2 with min part >= 2.
class QElement {
 public:
  static QElement plain(Partition lambda) {
    return QElement(Value(std::in_place_index<0>, std::move(lambda)));
  }
  static QElement rooted(RootedPartition rho) {
    return QElement(Value(std::in_place_index<1>, std::move(rho)));
  }

  bool is_plain() const { return value_.index() == 0; }
  const Partition& plain_partition() const { return std::get<0>(value_); }
  const RootedPartition& rooted_partition() const { return std::get<1>(value_); }

  // the n both kinds refer to
  long long parameter() const {
    return is_plain() ? plain_partition().weight() : rooted_partition().weight() - 2;
  }

  friend bool operator==(const QElement&, const QElement&) = default;
  friend auto operator<=>(const QElement&, const QElement&) = default;

 private:
  using Value = std::variant<Partition, RootedPartition>;
  explicit QElement(Value value) : value_(std::move(value)) {}
  Value value_;
};

inline int sign_of(const SpfTable& spf, const QElement& q) {
  return q.is_plain() ? 1 : sign_of(spf, q.rooted_partition());
}

struct QInvolutionStep {
  enum class Branch { plain_to_rooted, rooted_case1, rooted_case2, rooted_to_plain };
  Branch branch;
  int m;          // plain branch: count of ones plus two
  int prime;      // plain branch: smallest prime of m
  int root;       // rooted branches: k and m as in involution_c
  int count;
  int new_root;
  int new_count;
  QElement image;
};

inline QInvolutionStep involution_d_step(const SpfTable& spf, const QElement& q) {
  using Branch = QInvolutionStep::Branch;
  if (q.is_plain()) {
    // trade the ones plus two borrowed units for m/pi(m) parts of pi(m)
    const auto split = split_small_parts(q.plain_partition(), 2);
    const int m = static_cast<int>(split.small.weight()) + 2;
    const int p = spf.min_prime(m).prime();
    const RootedPartition replacement(Partition(std::vector<int>(m / p, p)), p, 1);
    return {Branch::plain_to_rooted, m, p, 0, 0, 0, 0,
            QElement::rooted(direct_sum_rooted(split.big, replacement))};
  }

  const RootedPartition& rho = q.rooted_partition();
  if (!rho.base().min_part_at_least(2))
    throw std::invalid_argument("involution_d: rooted element has a part below 2");
  const int root = rho.root_value();
  if (!spf.is_squarefree(root))
    throw std::invalid_argument("involution_d: root value " + std::to_string(root) +
                                " is not square free");
  const auto split = split_trailing_root(rho);
  const int count = split.tail.base().length();
  const MinPrime pk = spf.min_prime(root);
  const MinPrime pm = spf.min_prime(count);  // root >= 2, so pk is finite
  if (pk <= pm) {
    const int new_root = root / pk.prime();
    const int new_count = count * pk.prime();
    if (new_root == 1) {
      // the run degenerates to ones; return the two borrowed units and
      // re-enter the plain side
      const Partition ones(std::vector<int>(new_count - 2, 1));
      return {Branch::rooted_to_plain, 0, 0, root, count, new_root, new_count,
              QElement::plain(direct_sum(split.rest, ones))};
    }
    const RootedPartition replacement(
        Partition(std::vector<int>(new_count, new_root)), new_root, 1);
    return {Branch::rooted_case1, 0, 0, root, count, new_root, new_count,
            QElement::rooted(direct_sum_rooted(split.rest, replacement))};
  }
  const int new_root = root * pm.prime();
  const int new_count = count / pm.prime();
  const RootedPartition replacement(
      Partition(std::vector<int>(new_count, new_root)), new_root, 1);
  return {Branch::rooted_case2, 0, 0, root, count, new_root, new_count,
          QElement::rooted(direct_sum_rooted(split.rest, replacement))};
}

inline QElement involution_d(const SpfTable& spf, const QElement& q) {
  return involution_d_step(spf, q).image;
}

}  // namespace rootpart
