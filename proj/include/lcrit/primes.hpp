#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace lcrit {

/// Smallest-prime-factor table for 0..limit.
class Sieve {
 public:
  explicit Sieve(std::uint32_t limit) : spf_(limit + 1, 0) {
    for (std::uint32_t i = 2; i <= limit; ++i) {
      if (spf_[i] == 0) {
        primes_.push_back(i);
        for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i)
          if (spf_[j] == 0) spf_[j] = i;
        spf_[i] = i;
      }
    }
  }

  std::uint32_t limit() const { return static_cast<std::uint32_t>(spf_.size() - 1); }
  const std::vector<std::uint32_t>& primes() const { return primes_; }
  bool is_prime(std::uint32_t n) const { return n >= 2 && spf_[n] == n; }
  std::uint32_t smallest_factor(std::uint32_t n) const { return spf_[n]; }

  /// (prime, exponent) pairs in ascending order; n >= 1.
  std::vector<std::pair<std::uint32_t, unsigned>> factor(std::uint32_t n) const {
    std::vector<std::pair<std::uint32_t, unsigned>> out;
    while (n > 1) {
      std::uint32_t p = spf_[n];
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(p, e);
    }
    return out;
  }

 private:
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

inline bool is_small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace lcrit
