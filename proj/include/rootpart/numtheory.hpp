#pragma once

// Elementary number theory on machine integers, backed by a smallest-prime-
// factor sieve: primality, distinct prime counts, Moebius mu, Euler phi, and
// the coprime residue sets used by the partition identities.

#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace rootpart {

inline long long gcd(long long a, long long b) { return std::gcd(a, b); }

// Smallest prime dividing n. For n = 1 no prime divides, and the value is
// infinite; infinity compares greater than every prime.
class MinPrime {
 public:
  static MinPrime infinity() { return MinPrime{0}; }

  static MinPrime of(int p) {
    if (p < 2)
      throw std::invalid_argument("MinPrime::of: not a prime: " + std::to_string(p));
    return MinPrime{p};
  }

  bool is_infinite() const { return p_ == 0; }

  int prime() const {
    if (is_infinite()) throw std::logic_error("MinPrime: no finite value");
    return p_;
  }

  friend bool operator==(MinPrime a, MinPrime b) { return a.p_ == b.p_; }
  friend std::strong_ordering operator<=>(MinPrime a, MinPrime b) {
    return a.key() <=> b.key();
  }

 private:
  explicit MinPrime(int p) : p_(p) {}
  int key() const { return p_ == 0 ? std::numeric_limits<int>::max() : p_; }
  int p_;
};

class SpfTable {
 public:
  static constexpr int kDefaultLimit = 10000;

  explicit SpfTable(int limit = kDefaultLimit) : limit_(limit) {
    if (limit_ < 2)
      throw std::invalid_argument("SpfTable: limit must be at least 2");
    spf_.assign(static_cast<std::size_t>(limit_) + 1, 0);
    for (int i = 2; i <= limit_; ++i) {
      if (spf_[i] != 0) continue;  // composite, already claimed by a smaller prime
      for (long long j = i; j <= limit_; j += i)
        if (spf_[j] == 0) spf_[j] = i;
    }
  }

  int limit() const { return limit_; }

  // smallest prime factor, n >= 2
  int spf(int n) const {
    check_range(n, 2);
    return spf_[n];
  }

  bool is_prime(int n) const { return n >= 2 && spf(n) == n; }

  MinPrime min_prime(int n) const {
    check_range(n, 1);
    return n == 1 ? MinPrime::infinity() : MinPrime::of(spf_[n]);
  }

  // number of distinct prime divisors
  int delta(int n) const {
    check_range(n, 1);
    int count = 0;
    while (n > 1) {
      const int p = spf_[n];
      ++count;
      while (n % p == 0) n /= p;
    }
    return count;
  }

  bool is_squarefree(int n) const {
    check_range(n, 1);
    while (n > 1) {
      const int p = spf_[n];
      n /= p;
      if (n % p == 0) return false;
    }
    return true;
  }

  // (-1)^delta(n) when n is square free, 0 otherwise
  int moebius(int n) const {
    check_range(n, 1);
    int sign = 1;
    while (n > 1) {
      const int p = spf_[n];
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
    return sign;
  }

  long long totient(int n) const {
    check_range(n, 1);
    long long phi = 1;
    while (n > 1) {
      const int p = spf_[n];
      long long factor = p - 1;
      n /= p;
      while (n % p == 0) {
        factor *= p;
        n /= p;
      }
      phi *= factor;
    }
    return phi;
  }

 private:
  void check_range(int n, int lo) const {
    if (n < lo)
      throw std::invalid_argument("SpfTable: argument must be >= " +
                                  std::to_string(lo) + ", got " + std::to_string(n));
    if (n > limit_)
      throw std::out_of_range("SpfTable: " + std::to_string(n) +
                              " exceeds sieve limit " + std::to_string(limit_));
  }

  int limit_;
  std::vector<int> spf_;
};

// j in [1, n] with gcd(j, n) = 1, ascending
inline std::vector<int> coprime_set(int n) {
  if (n < 1) throw std::invalid_argument("coprime_set: n must be positive");
  std::vector<int> out;
  for (int j = 1; j <= n; ++j)
    if (std::gcd(j, n) == 1) out.push_back(j);
  return out;
}

// j below n/2 with gcd(j, n) = 1, ascending; has totient(n)/2 elements once n >= 3
inline std::vector<int> half_coprime_set(int n) {
  if (n < 1) throw std::invalid_argument("half_coprime_set: n must be positive");
  std::vector<int> out;
  for (int j = 1; 2 * j < n; ++j)
    if (std::gcd(j, n) == 1) out.push_back(j);
  return out;
}

}  // namespace rootpart
