#pragma once

// Step-by-step renderings of single map applications, used by the command
// line trace subcommand. Every trace starts with the map name and an input
// line and ends with a result line.

#include <numeric>
#include <string>

#include "bijections.hpp"
#include "format.hpp"
#include "involutions.hpp"
#include "numtheory.hpp"
#include "partition.hpp"

namespace rootpart {

namespace detail {

inline std::string pi_text(const MinPrime& p) {
  return p.is_infinite() ? "inf" : std::to_string(p.prime());
}

}  // namespace detail

inline std::string trace_map_a(const RootedPartition& rho) {
  const TotientImage image = map_a(rho);
  const int ones = rho.base().multiplicity(1);
  const int position = rho.root_ordinal();
  const int g = static_cast<int>(std::gcd(ones + 1, position));
  const auto split = split_small_parts(rho.base(), 2);
  std::string out = "map a\n";
  out += "input: " + format_rooted(rho) + "\n";
  out += "ones: o=" + std::to_string(ones) + ", root ordinal p=" + std::to_string(position) +
         ", g=gcd(" + std::to_string(ones + 1) + "," + std::to_string(position) + ")=" +
         std::to_string(g) + "\n";
  out += "keep: " + format_partition(split.big) + "\n";
  out += "replace: " + std::to_string(g) + " copies of " + std::to_string((ones + 1) / g) +
         ", residue " + std::to_string(position) + "/" + std::to_string(g) + "=" +
         std::to_string(image.residue) + "\n";
  out += "result: " + format_image(image) + "\n";
  return out;
}

inline std::string trace_inv_a(const TotientImage& image) {
  const RootedPartition rho = inv_a(image);
  const auto split = split_trailing_root(image.rooted);
  const long long s = split.tail.weight();
  const int k = image.rooted.root_value();
  const long long position = image.residue * s / k;
  std::string out = "map a-inv\n";
  out += "input: " + format_image(image) + "\n";
  out += "tail: " + format_rooted(split.tail) + " (s=" + std::to_string(s) +
         "), rest: " + format_partition(split.rest) + "\n";
  out += "ones: s-1=" + std::to_string(s - 1) + ", root ordinal r*s/k=" +
         std::to_string(image.residue) + "*" + std::to_string(s) + "/" +
         std::to_string(k) + "=" + std::to_string(position) + "\n";
  out += "result: " + format_rooted(rho) + "\n";
  return out;
}

inline std::string trace_map_b(const Partition& lambda) {
  const TotientImage image = map_b(lambda);
  const auto split = split_small_parts(lambda, 3);
  const int s = static_cast<int>(split.small.weight()) + 3;
  const int t = split.small.multiplicity(2) + 1;
  const int g = static_cast<int>(std::gcd(s, t));
  std::string out = "map b\n";
  out += "input: " + format_partition(lambda) + "\n";
  out += "small: " + format_partition(split.small) + " (s=" +
         std::to_string(split.small.weight()) + "+3=" + std::to_string(s) +
         ", t=" + std::to_string(t - 1) + "+1=" + std::to_string(t) + "), g=gcd(" +
         std::to_string(s) + "," + std::to_string(t) + ")=" + std::to_string(g) + "\n";
  out += "keep: " + format_partition(split.big) + "\n";
  out += "replace: " + std::to_string(g) + " copies of " + std::to_string(s / g) +
         ", residue " + std::to_string(t) + "/" + std::to_string(g) + "=" +
         std::to_string(image.residue) + "\n";
  out += "result: " + format_image(image) + "\n";
  return out;
}

inline std::string trace_inv_b(const TotientImage& image) {
  const Partition lambda = inv_b(image);
  const auto split = split_trailing_root(image.rooted);
  const long long w = split.tail.weight();
  const int k = image.rooted.root_value();
  const int r = image.residue;
  const long long twos = r * w / k - 1;
  const long long ones = (w - 3) - 2 * twos;
  std::string out = "map b-inv\n";
  out += "input: " + format_image(image) + "\n";
  out += "tail: " + format_rooted(split.tail) + " (w=" + std::to_string(w) +
         "), rest: " + format_partition(split.rest) + "\n";
  out += "small: twos " + std::to_string(r) + "*" + std::to_string(w) + "/" +
         std::to_string(k) + "-1=" + std::to_string(twos) + ", ones " +
         std::to_string(w) + "-3-2*" + std::to_string(twos) + "=" +
         std::to_string(ones) + "\n";
  out += "result: " + format_partition(lambda) + "\n";
  return out;
}

inline std::string trace_involution_c(const SpfTable& spf, const RootedPartition& rho) {
  const InvolutionStep step = involution_c_step(spf, rho);
  std::string out = "involution c\n";
  out += "input: " + format_rooted(rho) + "\n";
  out += "run: k=" + std::to_string(step.root) + ", m=" + std::to_string(step.count) +
         ", pi(k)=" + detail::pi_text(spf.min_prime(step.root)) +
         ", pi(m)=" + detail::pi_text(spf.min_prime(step.count)) + "\n";
  switch (step.kind) {
    case InvCase::fixed:
      out += "fixed point\n";
      break;
    case InvCase::case1:
      out += "case 1: k -> " + std::to_string(step.root) + "/" +
             std::to_string(spf.min_prime(step.root).prime()) + "=" +
             std::to_string(step.new_root) + ", m -> " + std::to_string(step.count) +
             "*" + std::to_string(spf.min_prime(step.root).prime()) + "=" +
             std::to_string(step.new_count) + "\n";
      break;
    case InvCase::case2:
      out += "case 2: k -> " + std::to_string(step.root) + "*" +
             std::to_string(spf.min_prime(step.count).prime()) + "=" +
             std::to_string(step.new_root) + ", m -> " + std::to_string(step.count) +
             "/" + std::to_string(spf.min_prime(step.count).prime()) + "=" +
             std::to_string(step.new_count) + "\n";
      break;
  }
  out += "result: " + format_rooted(step.image) + "\n";
  return out;
}

inline std::string trace_involution_d(const SpfTable& spf, const QElement& q) {
  const QInvolutionStep step = involution_d_step(spf, q);
  using Branch = QInvolutionStep::Branch;
  std::string out = "involution d\n";
  out += "input: " + format_q_element(q) + "\n";
  switch (step.branch) {
    case Branch::plain_to_rooted:
      out += "ones: o=" + std::to_string(step.m - 2) + ", m=o+2=" + std::to_string(step.m) +
             ", pi(m)=" + std::to_string(step.prime) + "\n";
      out += "replace: " + std::to_string(step.m / step.prime) + " copies of " +
             std::to_string(step.prime) + "\n";
      break;
    case Branch::rooted_to_plain:
      out += "run: k=" + std::to_string(step.root) + ", m=" + std::to_string(step.count) +
             ", pi(k)=" + std::to_string(step.root) + ", pi(m)=" +
             detail::pi_text(spf.min_prime(step.count)) + "\n";
      out += "case 1: k -> 1, run becomes " + std::to_string(step.new_count) +
             " ones, return two\n";
      break;
    case Branch::rooted_case1:
      out += "run: k=" + std::to_string(step.root) + ", m=" + std::to_string(step.count) +
             ", pi(k)=" + std::to_string(spf.min_prime(step.root).prime()) +
             ", pi(m)=" + detail::pi_text(spf.min_prime(step.count)) + "\n";
      out += "case 1: k -> " + std::to_string(step.root) + "/" +
             std::to_string(spf.min_prime(step.root).prime()) + "=" +
             std::to_string(step.new_root) + ", m -> " + std::to_string(step.count) +
             "*" + std::to_string(spf.min_prime(step.root).prime()) + "=" +
             std::to_string(step.new_count) + "\n";
      break;
    case Branch::rooted_case2:
      out += "run: k=" + std::to_string(step.root) + ", m=" + std::to_string(step.count) +
             ", pi(k)=" + std::to_string(spf.min_prime(step.root).prime()) +
             ", pi(m)=" + std::to_string(spf.min_prime(step.count).prime()) + "\n";
      out += "case 2: k -> " + std::to_string(step.root) + "*" +
             std::to_string(spf.min_prime(step.count).prime()) + "=" +
             std::to_string(step.new_root) + ", m -> " + std::to_string(step.count) +
             "/" + std::to_string(spf.min_prime(step.count).prime()) + "=" +
             std::to_string(step.new_count) + "\n";
      break;
  }
  out += "result: " + format_q_element(step.image) + "\n";
  return out;
}

}  // namespace rootpart
