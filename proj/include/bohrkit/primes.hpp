#pragma once

#include <cstdint>
#include <shared_mutex>
#include <vector>

#include <gmpxx.h>

#include "bohrkit/multipoly.hpp"

namespace bohrkit {

// First primes p_1 = 2, p_2 = 3, ... plus a smallest-prime-factor sieve up to
// limit(). The prime list grows on demand by segmented sieving, never past
// extension_ceiling(). Concurrent reads are safe; extension is serialized
// behind an exclusive lock.
class PrimeTable {
 public:
  static constexpr std::uint64_t kDefaultLimit = 1'000'000;
  static constexpr std::uint64_t kDefaultCeiling = 200'000'000;

  explicit PrimeTable(std::uint64_t limit = kDefaultLimit,
                      std::uint64_t extension_ceiling = kDefaultCeiling);

  PrimeTable(const PrimeTable&) = delete;
  PrimeTable& operator=(const PrimeTable&) = delete;

  std::uint64_t limit() const { return limit_; }
  std::uint64_t extension_ceiling() const { return ceiling_; }
  // Every prime <= covered() is currently stored.
  std::uint64_t covered() const;

  // j-th prime, 1-based. Extends the table as needed.
  std::uint64_t prime(std::uint32_t j) const;
  // Index j with prime(j) == p. Throws ValidationError if p is not prime.
  std::uint32_t index_of(std::uint64_t p) const;
  std::uint32_t smallest_prime_factor(std::uint32_t n) const { return spf_.at(n); }

  // n = prod p_j^{alpha_j}; empty for n = 1. Throws ValidationError for
  // n < 1 and TableExtensionError when a prime factor is beyond reach.
  ExponentVector factorize(const mpz_class& n) const;

 private:
  void ensure_covered(std::uint64_t bound) const;
  void ensure_count(std::uint32_t count) const;
  void extend_locked(std::uint64_t bound) const;

  std::uint64_t limit_;
  std::uint64_t ceiling_;
  std::vector<std::uint32_t> spf_;

  mutable std::shared_mutex mutex_;
  mutable std::vector<std::uint64_t> primes_;
  mutable std::uint64_t covered_ = 0;
};

}  // namespace bohrkit

namespace bohrkit {

// p_1..p_m by trial division; for callers that only need a handful of primes.
std::vector<std::uint64_t> first_primes(std::uint32_t m);

}  // namespace bohrkit
