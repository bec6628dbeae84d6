#pragma once

// Exhaustive desk-scale checking. Each identity report pits an enumeration
// tally (lhs) against a totient/moebius-weighted sum of part-count
// statistics computed by dynamic programming (rhs); the two sides share no
// code. Structural checks audit the bijections pair by pair and the
// involutions orbit by orbit. A suite runner sweeps a range of n and the
// results render as TSV or JSON.
//
// The four identities, with p counting partitions and S(n, k, r) the
// part-count statistic over partitions with min part >= r:
//
//   a: #ones over partitions of n   = sum over k >= 2 of phi(k) * S(n+1, k, 2)
//   b: p(n) = sum over k >= 3 of phi(k)/2 * S(n+3, k, 3)
//   c: p(n) = sum over k >= 1 of mu(k) * S(n+1, k, 1)
//   d: p(n) = - sum over k >= 2 of mu(k) * S(n+2, k, 2)
//
// The fine rows check, for each k, that parts equal to k and values repeated
// at least k times are equinumerous over the partitions of n.

#include <chrono>
#include <cstdio>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "bijections.hpp"
#include "counting.hpp"
#include "enumerate.hpp"
#include "involutions.hpp"
#include "numtheory.hpp"
#include "partition.hpp"

namespace rootpart {

enum class Identity { a, b, c, d, fine };

inline const char* name_of(Identity id) {
  switch (id) {
    case Identity::a: return "a";
    case Identity::b: return "b";
    case Identity::c: return "c";
    case Identity::d: return "d";
    case Identity::fine: return "fine";
  }
  return "?";
}

struct IdentityReport {
  Identity identity;
  int n;
  long long lhs;
  long long rhs;
  bool passed;
  double elapsed_ms;
};

enum class StructuralKind { bijection, involution };

struct StructuralReport {
  StructuralKind kind;
  Identity identity;
  int n;
  bool passed;
  double elapsed_ms;
};

inline std::string structural_label(const StructuralReport& row) {
  return std::string(row.kind == StructuralKind::bijection ? "bijection-" : "involution-") +
         name_of(row.identity);
}

namespace detail {

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline long long count_ones_in_partitions(int n) {
  long long total = 0;
  const PartitionRange range(n);
  for (auto it = range.begin(); it != range.end(); ++it) {
    const auto& parts = it.raw();
    for (auto rit = parts.rbegin(); rit != parts.rend() && *rit == 1; ++rit) ++total;
  }
  return total;
}

inline long long count_all_partitions(int n) {
  long long total = 0;
  const PartitionRange range(n);
  for (auto it = range.begin(); it != range.end(); ++it) ++total;
  return total;
}

}  // namespace detail

// One identity at one n. The sieve must cover n + 3.
inline IdentityReport check_identity(const SpfTable& spf, Identity id, int n) {
  if (n < 0) throw std::invalid_argument("check_identity: n must be >= 0");
  const detail::Stopwatch timer;
  long long lhs = 0, rhs = 0;
  switch (id) {
    case Identity::a: {
      lhs = detail::count_ones_in_partitions(n);
      const auto counts = partition_count_table(n + 1, 2);
      for (int k = 2; k <= n + 1; ++k)
        rhs = detail::checked_add(
            rhs, detail::checked_mul(spf.totient(k),
                                     statistic_from_table(counts, n + 1, k, 2)));
      break;
    }
    case Identity::b: {
      lhs = detail::count_all_partitions(n);
      const auto counts = partition_count_table(n + 3, 3);
      for (int k = 3; k <= n + 3; ++k) {
        const long long value = statistic_from_table(counts, n + 3, k, 3);
        if (value == 0) continue;
        const long long phi = spf.totient(k);
        if (phi % 2 != 0)
          throw std::logic_error("check_identity: odd totient on a contributing term");
        rhs = detail::checked_add(rhs, detail::checked_mul(phi / 2, value));
      }
      break;
    }
    case Identity::c: {
      lhs = detail::count_all_partitions(n);
      const auto counts = partition_count_table(n + 1, 1);
      for (int k = 1; k <= n + 1; ++k)
        rhs = detail::checked_add(
            rhs, detail::checked_mul(spf.moebius(k),
                                     statistic_from_table(counts, n + 1, k, 1)));
      break;
    }
    case Identity::d: {
      lhs = detail::count_all_partitions(n);
      const auto counts = partition_count_table(n + 2, 2);
      long long sum = 0;
      for (int k = 2; k <= n + 2; ++k)
        sum = detail::checked_add(
            sum, detail::checked_mul(spf.moebius(k),
                                     statistic_from_table(counts, n + 2, k, 2)));
      rhs = -sum;
      break;
    }
    case Identity::fine:
      throw std::invalid_argument("check_identity: fine rows come from check_fine");
  }
  return {id, n, lhs, rhs, lhs == rhs, timer.elapsed_ms()};
}

// Parts equal to k vs values repeated at least k times, over partitions of n.
inline IdentityReport check_fine(int n, int k) {
  if (n < 0 || k < 1)
    throw std::invalid_argument("check_fine: need n >= 0, k >= 1");
  const detail::Stopwatch timer;
  long long lhs = 0, rhs = 0;
  const PartitionRange range(n);
  for (auto it = range.begin(); it != range.end(); ++it) {
    const auto& parts = it.raw();
    std::size_t i = 0;
    while (i < parts.size()) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      if (parts[i] == k) lhs += static_cast<long long>(j - i);
      if (j - i >= static_cast<std::size_t>(k)) ++rhs;
      i = j;
    }
  }
  if (lhs != statistic(n, k, 1))
    throw std::logic_error("check_fine: enumeration tally disagrees with the statistic");
  return {Identity::fine, n, lhs, rhs, lhs == rhs, timer.elapsed_ms()};
}

namespace detail {

// All k at once; on a mismatch the report carries the first offending k's
// totals, otherwise both sides hold the common grand total.
inline IdentityReport fine_row(int n) {
  const Stopwatch timer;
  std::vector<long long> f(static_cast<std::size_t>(n) + 1, 0);
  std::vector<long long> mult_histogram(static_cast<std::size_t>(n) + 1, 0);
  const PartitionRange range(n);
  for (auto it = range.begin(); it != range.end(); ++it) {
    const auto& parts = it.raw();
    std::size_t i = 0;
    while (i < parts.size()) {
      std::size_t j = i;
      while (j < parts.size() && parts[j] == parts[i]) ++j;
      f[static_cast<std::size_t>(parts[i])] += static_cast<long long>(j - i);
      ++mult_histogram[j - i];
      i = j;
    }
  }
  std::vector<long long> g(static_cast<std::size_t>(n) + 1, 0);
  long long repeats = 0;
  for (int k = n; k >= 1; --k) {
    repeats += mult_histogram[static_cast<std::size_t>(k)];
    g[static_cast<std::size_t>(k)] = repeats;
  }
  long long total = 0;
  for (int k = 1; k <= n; ++k) {
    if (f[static_cast<std::size_t>(k)] != g[static_cast<std::size_t>(k)])
      return {Identity::fine, n, f[static_cast<std::size_t>(k)],
              g[static_cast<std::size_t>(k)], false, timer.elapsed_ms()};
    total += f[static_cast<std::size_t>(k)];
  }
  return {Identity::fine, n, total, total, true, timer.elapsed_ms()};
}

}  // namespace detail

// Full audit of the first bijection at one n: every rooted-at-1 partition of
// n maps into the codomain injectively, every codomain pair is hit, and the
// inverse undoes the map on both sides.
inline bool check_bijection_a(int n) {
  std::set<TotientImage> images;
  long long domain = 0;
  for (const RootedPartition& rho : RootedPartitionRange(n, 1)) {
    ++domain;
    const TotientImage image = map_a(rho);
    const int k = image.rooted.root_value();
    if (image.rooted.weight() != n + 1) return false;
    if (!image.rooted.base().min_part_at_least(2)) return false;
    if (image.residue < 1 || image.residue >= k) return false;
    if (std::gcd(image.residue, k) != 1) return false;
    if (!images.insert(image).second) return false;
    if (!(inv_a(image) == rho)) return false;
  }
  long long codomain = 0;
  for (int k = 2; k <= n + 1; ++k) {
    const auto residues = coprime_set(k);
    for (const RootedPartition& rho : RootedPartitionRange(n + 1, k, 2)) {
      for (const int r : residues) {
        ++codomain;
        const TotientImage image{rho, r};
        if (images.find(image) == images.end()) return false;
        if (!(map_a(inv_a(image)) == image)) return false;
      }
    }
  }
  return domain == codomain;
}

inline bool check_bijection_b(int n) {
  std::set<TotientImage> images;
  long long domain = 0;
  for (const Partition& lambda : PartitionRange(n)) {
    ++domain;
    const TotientImage image = map_b(lambda);
    const int k = image.rooted.root_value();
    if (image.rooted.weight() != n + 3) return false;
    if (!image.rooted.base().min_part_at_least(3)) return false;
    if (image.residue < 1 || 2 * image.residue >= k) return false;
    if (std::gcd(image.residue, k) != 1) return false;
    if (!images.insert(image).second) return false;
    if (!(inv_b(image) == lambda)) return false;
  }
  long long codomain = 0;
  for (int k = 3; k <= n + 3; ++k) {
    const auto residues = half_coprime_set(k);
    for (const RootedPartition& rho : RootedPartitionRange(n + 3, k, 3)) {
      for (const int r : residues) {
        ++codomain;
        const TotientImage image{rho, r};
        if (images.find(image) == images.end()) return false;
        if (!(map_b(inv_b(image)) == image)) return false;
      }
    }
  }
  return domain == codomain;
}

inline bool check_bijection(Identity id, int n) {
  if (id == Identity::a) return check_bijection_a(n);
  if (id == Identity::b) return check_bijection_b(n);
  throw std::invalid_argument("check_bijection: only identities a and b have one");
}

// Involution audit over the square-free-rooted partitions of n + 1: two
// applications restore the input, signs flip off the fixed set, the cases
// pair up, fixed points are exactly the embeddings of the partitions of n,
// and the signed count collapses onto them.
inline bool check_involution_c(const SpfTable& spf, int n) {
  long long signed_sum = 0;
  std::set<RootedPartition> fixed;
  for (const Partition& lambda : PartitionRange(n + 1)) {
    for (const auto& [value, mult] : runs(lambda)) {
      if (!spf.is_squarefree(value)) continue;
      for (int ordinal = 1; ordinal <= mult; ++ordinal) {
        const RootedPartition rho(lambda, value, ordinal);
        const InvolutionStep step = involution_c_step(spf, rho);
        if (step.image.weight() != n + 1) return false;
        const int sign = sign_of(spf, rho);
        if (step.kind == InvCase::fixed) {
          if (!(step.image == rho)) return false;
          if (sign != 1) return false;
          fixed.insert(rho);
        } else {
          if (step.image == rho) return false;
          if (sign_of(spf, step.image) != -sign) return false;
          const InvolutionStep back = involution_c_step(spf, step.image);
          if (!(back.image == rho)) return false;
          if (step.kind == InvCase::case1 && back.kind != InvCase::case2) return false;
          if (step.kind == InvCase::case2 && back.kind != InvCase::case1) return false;
        }
        signed_sum += sign;
      }
    }
  }
  std::set<RootedPartition> expected;
  for (const Partition& lambda : PartitionRange(n)) expected.insert(embed_c(lambda));
  if (fixed != expected) return false;
  return signed_sum == static_cast<long long>(fixed.size());
}

// Involution audit over the signed union at parameter n: no fixed points,
// two applications restore the input, signs flip, plain elements always
// cross to the rooted side, and the signed count cancels to zero.
inline bool check_involution_d(const SpfTable& spf, int n) {
  std::vector<QElement> elements;
  for (const Partition& lambda : PartitionRange(n))
    elements.push_back(QElement::plain(lambda));
  for (int k = 2; k <= n + 2; ++k) {
    if (!spf.is_squarefree(k)) continue;
    for (const RootedPartition& rho : RootedPartitionRange(n + 2, k, 2))
      elements.push_back(QElement::rooted(rho));
  }
  long long signed_sum = 0;
  for (const QElement& element : elements) {
    const QElement image = involution_d(spf, element);
    if (image == element) return false;
    if (image.parameter() != n) return false;
    if (element.is_plain() && image.is_plain()) return false;
    if (!image.is_plain()) {
      if (!image.rooted_partition().base().min_part_at_least(2)) return false;
      if (!spf.is_squarefree(image.rooted_partition().root_value())) return false;
    }
    if (sign_of(spf, image) != -sign_of(spf, element)) return false;
    if (!(involution_d(spf, image) == element)) return false;
    signed_sum += sign_of(spf, element);
  }
  return signed_sum == 0;
}

inline bool check_involution(const SpfTable& spf, Identity id, int n) {
  if (id == Identity::c) return check_involution_c(spf, n);
  if (id == Identity::d) return check_involution_d(spf, n);
  throw std::invalid_argument("check_involution: only identities c and d have one");
}

struct SuiteResult {
  std::vector<IdentityReport> reports;
  std::vector<StructuralReport> structural;
  bool all_passed = true;
};

inline const std::set<Identity>& all_identities() {
  static const std::set<Identity> all = {Identity::a, Identity::b, Identity::c,
                                         Identity::d, Identity::fine};
  return all;
}

// Identity reports for n = 0..max_n and structural audits for
// n = 0..structural_max_n, in n-major order, restricted to the selection.
inline SuiteResult run_suite(const SpfTable& spf, int max_n, int structural_max_n,
                             const std::set<Identity>& selection) {
  SuiteResult result;
  for (int n = 0; n <= max_n; ++n) {
    for (const Identity id : {Identity::a, Identity::b, Identity::c, Identity::d})
      if (selection.count(id))
        result.reports.push_back(check_identity(spf, id, n));
    if (selection.count(Identity::fine))
      result.reports.push_back(detail::fine_row(n));
  }
  for (int n = 0; n <= structural_max_n; ++n) {
    for (const Identity id : {Identity::a, Identity::b}) {
      if (!selection.count(id)) continue;
      const detail::Stopwatch timer;
      const bool passed = check_bijection(id, n);
      result.structural.push_back(
          {StructuralKind::bijection, id, n, passed, timer.elapsed_ms()});
    }
    for (const Identity id : {Identity::c, Identity::d}) {
      if (!selection.count(id)) continue;
      const detail::Stopwatch timer;
      const bool passed = check_involution(spf, id, n);
      result.structural.push_back(
          {StructuralKind::involution, id, n, passed, timer.elapsed_ms()});
    }
  }
  for (const auto& row : result.reports) result.all_passed = result.all_passed && row.passed;
  for (const auto& row : result.structural) result.all_passed = result.all_passed && row.passed;
  return result;
}

inline SuiteResult run_suite(const SpfTable& spf, int max_n = 60,
                             int structural_max_n = 25) {
  return run_suite(spf, max_n, structural_max_n, all_identities());
}

namespace detail {

inline std::string format_ms(double ms) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3f", ms);
  return buffer;
}

}  // namespace detail

// Tab-separated identity rows; structural results are not part of the table.
inline std::string to_tsv(const SuiteResult& result) {
  std::ostringstream out;
  out << "identity\tn\tlhs\trhs\tpassed\telapsed_ms\n";
  for (const auto& row : result.reports)
    out << name_of(row.identity) << '\t' << row.n << '\t' << row.lhs << '\t'
        << row.rhs << '\t' << (row.passed ? "true" : "false") << '\t'
        << detail::format_ms(row.elapsed_ms) << '\n';
  return out.str();
}

inline std::string to_json(const SuiteResult& result) {
  std::ostringstream out;
  out << "{\"reports\":[";
  bool first = true;
  for (const auto& row : result.reports) {
    out << (first ? "" : ",") << "{\"identity\":\"" << name_of(row.identity)
        << "\",\"n\":" << row.n << ",\"lhs\":" << row.lhs << ",\"rhs\":" << row.rhs
        << ",\"passed\":" << (row.passed ? "true" : "false")
        << ",\"elapsed_ms\":" << detail::format_ms(row.elapsed_ms) << "}";
    first = false;
  }
  out << "],\"structural\":[";
  first = true;
  for (const auto& row : result.structural) {
    out << (first ? "" : ",") << "{\"check\":\""
        << (row.kind == StructuralKind::bijection ? "bijection" : "involution")
        << "\",\"identity\":\"" << name_of(row.identity) << "\",\"n\":" << row.n
        << ",\"passed\":" << (row.passed ? "true" : "false")
        << ",\"elapsed_ms\":" << detail::format_ms(row.elapsed_ms) << "}";
    first = false;
  }
  out << "],\"all_passed\":" << (result.all_passed ? "true" : "false") << "}\n";
  return out.str();
}

}  // namespace rootpart
