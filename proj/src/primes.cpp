#include "bohrkit/primes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>

#include "bohrkit/errors.hpp"

namespace bohrkit {

namespace {

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

}  // namespace

PrimeTable::PrimeTable(std::uint64_t limit, std::uint64_t extension_ceiling)
    : limit_(std::max<std::uint64_t>(limit, 2)), ceiling_(std::max(extension_ceiling, limit_)) {
  if (limit_ > 0xFFFFFFFFULL) throw ValidationError("prime table limit must fit in 32 bits");
  // Linear sieve.
  spf_.assign(limit_ + 1, 0);
  for (std::uint64_t i = 2; i <= limit_; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes_.push_back(i);
    }
    for (const auto p : primes_) {
      if (p > spf_[i] || i * p > limit_) break;
      spf_[i * p] = static_cast<std::uint32_t>(p);
    }
  }
  covered_ = limit_;
}

std::uint64_t PrimeTable::covered() const {
  std::shared_lock lock(mutex_);
  return covered_;
}

void PrimeTable::extend_locked(std::uint64_t bound) const {
  // Segmented sieve over (covered_, hi]; base primes up to sqrt(hi) are
  // already stored because hi <= covered_^2.
  while (covered_ < bound) {
    std::uint64_t hi = std::min({std::max(bound, 2 * covered_), ceiling_, covered_ * covered_});
    if (hi <= covered_) {
      throw TableExtensionError("prime table cannot extend past " + std::to_string(ceiling_));
    }
    const std::uint64_t lo = covered_ + 1;
    std::vector<char> composite(hi - lo + 1, 0);
    for (const auto p : primes_) {
      if (p * p > hi) break;
      std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (std::uint64_t k = start; k <= hi; k += p) composite[k - lo] = 1;
    }
    for (std::uint64_t k = lo; k <= hi; ++k) {
      if (!composite[k - lo]) primes_.push_back(k);
    }
    covered_ = hi;
  }
}

void PrimeTable::ensure_covered(std::uint64_t bound) const {
  {
    std::shared_lock lock(mutex_);
    if (covered_ >= bound) return;
  }
  std::unique_lock lock(mutex_);
  if (bound > ceiling_) {
    throw TableExtensionError("prime factor range " + std::to_string(bound) +
                              " exceeds extension ceiling " + std::to_string(ceiling_));
  }
  extend_locked(bound);
}

void PrimeTable::ensure_count(std::uint32_t count) const {
  {
    std::shared_lock lock(mutex_);
    if (primes_.size() >= count) return;
  }
  std::unique_lock lock(mutex_);
  while (primes_.size() < count) {
    if (covered_ >= ceiling_) {
      throw TableExtensionError("prime index " + std::to_string(count) +
                                " exceeds extension ceiling " + std::to_string(ceiling_));
    }
    extend_locked(std::min(ceiling_, 2 * covered_));
  }
}

std::uint64_t PrimeTable::prime(std::uint32_t j) const {
  if (j == 0) throw ValidationError("prime indices are 1-based; got 0");
  ensure_count(j);
  std::shared_lock lock(mutex_);
  return primes_[j - 1];
}

std::uint32_t PrimeTable::index_of(std::uint64_t p) const {
  ensure_covered(p);
  std::shared_lock lock(mutex_);
  const auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p) {
    throw ValidationError(std::to_string(p) + " is not prime");
  }
  return static_cast<std::uint32_t>(it - primes_.begin()) + 1;
}

ExponentVector PrimeTable::factorize(const mpz_class& n) const {
  if (n < 1) throw ValidationError("factorize requires n >= 1, got " + n.get_str());
  std::map<std::uint32_t, std::uint32_t> exps;
  mpz_class big = n;

  // Trial division while the cofactor does not fit in 64 bits.
  std::uint32_t j = 0;
  while (!big.fits_ulong_p()) {
    ++j;
    const std::uint64_t p = prime(j);
    while (mpz_divisible_ui_p(big.get_mpz_t(), p)) {
      mpz_divexact_ui(big.get_mpz_t(), big.get_mpz_t(), p);
      ++exps[j];
    }
  }

  std::uint64_t r = big.get_ui();
  if (r > limit_) {
    ensure_covered(std::min(isqrt(r), ceiling_));
    std::shared_lock lock(mutex_);
    for (std::size_t k = j; k < primes_.size() && r > limit_; ++k) {
      const std::uint64_t p = primes_[k];
      if (p * p > r) break;
      while (r % p == 0) {
        r /= p;
        ++exps[static_cast<std::uint32_t>(k + 1)];
      }
    }
    if (r > limit_ && isqrt(r) > covered_) {
      throw TableExtensionError("cannot certify a prime factor of " + n.get_str() +
                                " within extension ceiling " + std::to_string(ceiling_));
    }
  }
  if (r > limit_) {
    // No factor <= sqrt(r) remains, so r is prime.
    ++exps[index_of(r)];
    r = 1;
  }
  while (r > 1) {
    const std::uint32_t p = spf_[r];
    r /= p;
    ++exps[index_of(p)];
  }

  std::vector<ExponentVector::Entry> entries(exps.begin(), exps.end());
  return ExponentVector(std::move(entries));
}

}  // namespace bohrkit

namespace bohrkit {

std::vector<std::uint64_t> first_primes(std::uint32_t m) {
  std::vector<std::uint64_t> out;
  out.reserve(m);
  for (std::uint64_t c = 2; out.size() < m; ++c) {
    bool prime = true;
    for (const auto p : out) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) out.push_back(c);
  }
  return out;
}

}  // namespace bohrkit
