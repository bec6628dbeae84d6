#pragma once

// Two weight-raising bijections, each pairing a partition-side object with a
// (rooted partition, residue) image:
//
//   map_a: a weight-n partition rooted at a 1 goes to a rooted partition of
//   n + 1 with min part >= 2 plus a residue coprime to the root value.
//   With o ones and the root at ordinal p among them, g = gcd(o+1, p); the
//   ones are traded for g parts of size (o+1)/g, rooted at the first new
//   part, and the residue is p/g. Since g <= p <= o, the new parts are >= 2.
//
//   map_b: a plain partition of n goes to a rooted partition of n + 3 with
//   min part >= 3 plus a residue below half the root and coprime to it.
//   With sigma the parts below 3, s = |sigma| + 3 and t = (number of twos)
//   + 1, g = gcd(s, t); sigma is traded for g parts of size k = s/g and the
//   residue is t/g. From 2t <= s - 1, the residue sits below k/2.
//
// The inverse maps reconstruct the small parts from the trailing root run
// and the residue, and reject images outside the codomain.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "partition.hpp"

namespace rootpart {

struct TotientImage {
  RootedPartition rooted;
  int residue;

  friend bool operator==(const TotientImage&, const TotientImage&) = default;
  friend auto operator<=>(const TotientImage&, const TotientImage&) = default;
};

struct MalformedImage : std::invalid_argument {
  explicit MalformedImage(const std::string& what) : std::invalid_argument(what) {}
};

inline TotientImage map_a(const RootedPartition& rho) {
  if (rho.root_value() != 1)
    throw std::invalid_argument("map_a: input must be rooted at a part equal to 1");
  const int ones = rho.base().multiplicity(1);
  const int position = rho.root_ordinal();
  const int g = static_cast<int>(std::gcd(ones + 1, position));
  const auto split = split_small_parts(rho.base(), 2);  // small = the ones
  const int value = (ones + 1) / g;
  const RootedPartition replacement(Partition(std::vector<int>(g, value)), value, 1);
  return {direct_sum_rooted(split.big, replacement), position / g};
}

inline RootedPartition inv_a(const TotientImage& image) {
  const int k = image.rooted.root_value();
  const int r = image.residue;
  if (!image.rooted.base().min_part_at_least(2))
    throw MalformedImage("inv_a: image partition has a part below 2");
  if (r < 1 || r > k || std::gcd(r, k) != 1)
    throw MalformedImage("inv_a: residue " + std::to_string(r) +
                         " is not coprime to the root " + std::to_string(k));
  const auto split = split_trailing_root(image.rooted);
  const long long s = split.tail.weight();
  if ((r * s) % k != 0)
    throw MalformedImage("inv_a: root position r*s/k is not an integer");
  const long long position = r * s / k;
  if (position < 1 || position > s - 1)
    throw MalformedImage("inv_a: root position " + std::to_string(position) +
                         " outside [1, " + std::to_string(s - 1) + "]");
  const RootedPartition ones(Partition(std::vector<int>(static_cast<std::size_t>(s) - 1, 1)),
                             1, static_cast<int>(position));
  return direct_sum_rooted(split.rest, ones);
}

inline TotientImage map_b(const Partition& lambda) {
  const auto split = split_small_parts(lambda, 3);  // small = the ones and twos
  const int s = static_cast<int>(split.small.weight()) + 3;
  const int t = split.small.multiplicity(2) + 1;
  const int g = static_cast<int>(std::gcd(s, t));
  const int k = s / g;
  const RootedPartition replacement(Partition(std::vector<int>(g, k)), k, 1);
  return {direct_sum_rooted(split.big, replacement), t / g};
}

inline Partition inv_b(const TotientImage& image) {
  const int k = image.rooted.root_value();
  const int r = image.residue;
  if (!image.rooted.base().min_part_at_least(3))
    throw MalformedImage("inv_b: image partition has a part below 3");
  if (r < 1 || 2 * r >= k || std::gcd(r, k) != 1)
    throw MalformedImage("inv_b: residue " + std::to_string(r) +
                         " is not below half of and coprime to the root " +
                         std::to_string(k));
  const auto split = split_trailing_root(image.rooted);
  const long long w = split.tail.weight();
  if ((r * w) % k != 0)
    throw MalformedImage("inv_b: two-count r*w/k - 1 is not an integer");
  const long long twos = r * w / k - 1;
  const long long ones = (w - 3) - 2 * twos;
  if (twos < 0 || ones < 0)
    throw MalformedImage("inv_b: small-part counts are negative");
  std::vector<int> small(static_cast<std::size_t>(twos), 2);
  small.insert(small.end(), static_cast<std::size_t>(ones), 1);
  return direct_sum(split.rest, Partition(std::move(small)));
}

}  // namespace rootpart
