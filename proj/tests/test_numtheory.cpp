#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <stdexcept>

#include "rootpart/numtheory.hpp"

using namespace rootpart;

namespace {

// Reference implementations that never touch the sieve: trial division and
// literal gcd counting.

int trial_spf(int n) {
  for (int p = 2; p <= n; ++p)
    if (n % p == 0) return p;
  return 0;  // n = 1
}

int trial_delta(int n) {
  int count = 0;
  for (int p = 2; p <= n; ++p) {
    if (n % p == 0) {
      ++count;
      while (n % p == 0) n /= p;
    }
  }
  return count;
}

bool trial_squarefree(int n) {
  for (int d = 2; d * d <= n; ++d)
    if (n % (d * d) == 0) return false;
  return true;
}

int trial_moebius(int n) {
  if (!trial_squarefree(n)) return 0;
  return trial_delta(n) % 2 == 0 ? 1 : -1;
}

long long phi_by_count(int n) {
  long long count = 0;
  for (int j = 1; j <= n; ++j)
    if (std::gcd(j, n) == 1) ++count;
  return count;
}

}  // namespace

TEST_CASE("gcd basics") {
  CHECK(gcd(6, 3) == 3);
  CHECK(gcd(9, 3) == 3);
  CHECK(gcd(1, 7) == 1);
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(35, 64) == 1);
}

TEST_CASE("MinPrime treats 1 as infinite") {
  const SpfTable spf(100);
  CHECK(spf.min_prime(1).is_infinite());
  CHECK(spf.min_prime(2) == MinPrime::of(2));
  CHECK(spf.min_prime(15) == MinPrime::of(3));
  CHECK(MinPrime::infinity() > MinPrime::of(97));
  CHECK(MinPrime::of(2) < MinPrime::of(3));
  CHECK(MinPrime::infinity() == MinPrime::infinity());
  CHECK_THROWS_AS(MinPrime::of(1), std::invalid_argument);
  CHECK_THROWS_AS(MinPrime::infinity().prime(), std::logic_error);
}

TEST_CASE("smallest prime factors match trial division") {
  const SpfTable spf(2000);
  for (int n = 2; n <= 2000; ++n) {
    CAPTURE(n);
    CHECK(spf.spf(n) == trial_spf(n));
    CHECK(n % spf.spf(n) == 0);
  }
  CHECK(spf.is_prime(2));
  CHECK(spf.is_prime(1999));
  CHECK_FALSE(spf.is_prime(1));
  CHECK_FALSE(spf.is_prime(1998));
}

TEST_CASE("distinct prime divisor counts") {
  const SpfTable spf(2000);
  CHECK(spf.delta(1) == 0);
  CHECK(spf.delta(12) == 2);
  CHECK(spf.delta(30) == 3);
  CHECK(spf.delta(64) == 1);
  for (int n = 1; n <= 2000; ++n) {
    CAPTURE(n);
    CHECK(spf.delta(n) == trial_delta(n));
  }
}

TEST_CASE("moebius and square-free detection") {
  const SpfTable spf(2000);
  CHECK(spf.moebius(1) == 1);
  CHECK(spf.moebius(2) == -1);
  CHECK(spf.moebius(4) == 0);
  CHECK(spf.moebius(6) == 1);
  CHECK(spf.moebius(30) == -1);
  CHECK(spf.is_squarefree(1));
  CHECK(spf.is_squarefree(6));
  CHECK_FALSE(spf.is_squarefree(12));
  for (int n = 1; n <= 2000; ++n) {
    CAPTURE(n);
    CHECK(spf.moebius(n) == trial_moebius(n));
    CHECK(spf.is_squarefree(n) == trial_squarefree(n));
    CHECK((spf.moebius(n) != 0) == spf.is_squarefree(n));
  }
}

TEST_CASE("moebius divisor sums collapse to an indicator") {
  const SpfTable spf(2000);
  for (int n = 1; n <= 2000; ++n) {
    int sum = 0;
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) sum += spf.moebius(d);
    CAPTURE(n);
    CHECK(sum == (n == 1 ? 1 : 0));
  }
}

TEST_CASE("totient matches gcd counting") {
  const SpfTable spf(2000);
  CHECK(spf.totient(1) == 1);
  CHECK(spf.totient(4) == 2);
  CHECK(spf.totient(9) == 6);
  CHECK(spf.totient(2) + spf.totient(3) + spf.totient(5) == 7);
  CHECK(spf.totient(91) == spf.totient(7) * spf.totient(13));
  for (int n = 1; n <= 2000; ++n) {
    CAPTURE(n);
    CHECK(spf.totient(n) == phi_by_count(n));
  }
}

TEST_CASE("coprime residue sets") {
  CHECK(coprime_set(1) == std::vector<int>{1});
  CHECK(coprime_set(5) == std::vector<int>({1, 2, 3, 4}));
  CHECK(coprime_set(6) == std::vector<int>({1, 5}));
  CHECK(half_coprime_set(1).empty());
  CHECK(half_coprime_set(2).empty());
  CHECK(half_coprime_set(3) == std::vector<int>{1});
  CHECK(half_coprime_set(9) == std::vector<int>({1, 2, 4}));

  const SpfTable spf(300);
  for (int n = 1; n <= 300; ++n) {
    CAPTURE(n);
    CHECK(static_cast<long long>(coprime_set(n).size()) == spf.totient(n));
    if (n >= 3)
      CHECK(2 * static_cast<long long>(half_coprime_set(n).size()) == spf.totient(n));
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(SpfTable(1), std::invalid_argument);
  const SpfTable spf(50);
  CHECK_THROWS_AS(spf.moebius(0), std::invalid_argument);
  CHECK_THROWS_AS(spf.totient(-3), std::invalid_argument);
  CHECK_THROWS_AS(spf.spf(1), std::invalid_argument);
  CHECK_THROWS_AS(spf.delta(51), std::out_of_range);
  CHECK_THROWS_AS(coprime_set(0), std::invalid_argument);
  CHECK_THROWS_AS(half_coprime_set(0), std::invalid_argument);
  CHECK(SpfTable().limit() == SpfTable::kDefaultLimit);
}
