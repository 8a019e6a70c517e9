#include <doctest.h>

#include <random>
#include <thread>
#include <vector>

#include "bohrkit/bohr.hpp"
#include "bohrkit/errors.hpp"
#include "bohrkit/primes.hpp"
#include "generators.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace bohrkit;
using th::dp;
using th::mp;
using th::z;

namespace {

const PrimeTable& table() {
  static const PrimeTable pt;
  return pt;
}

}  // namespace

TEST_SUITE("primes") {
  TEST_CASE("factorize examples") {
    CHECK(table().factorize(1).is_constant());
    CHECK(table().factorize(12) == ExponentVector({{1, 2}, {2, 1}}));
    CHECK(table().factorize(97) == ExponentVector({{25, 1}}));
    CHECK(oracle::prime_index(97) == 25);
    CHECK_THROWS_AS(table().factorize(0), ValidationError);
  }

  TEST_CASE("prime list and index agree with counting") {
    for (std::uint32_t j = 1; j <= 300; ++j) {
      const auto p = table().prime(j);
      CHECK(oracle::is_prime(p));
      CHECK(oracle::prime_index(p) == j);
      CHECK(table().index_of(p) == j);
    }
    CHECK_THROWS_AS(table().index_of(91), ValidationError);
  }

  TEST_CASE("property: factorization matches trial division") {
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<std::uint64_t> pick(2, 5'000'000'000ULL);
    for (int trial = 0; trial < 300; ++trial) {
      const std::uint64_t n = pick(rng);
      const auto expected = oracle::trial_factor(n);
      const mpz_class nz(std::to_string(n));
      // indexing a prime needs every smaller prime, so factors past the ceiling are out of reach
      if (expected.rbegin()->first > table().extension_ceiling()) {
        CHECK_THROWS_AS(table().factorize(nz), TableExtensionError);
        continue;
      }
      const auto ev = table().factorize(nz);
      REQUIRE(ev.entries().size() == expected.size());
      auto it = expected.begin();
      for (const auto& [var, e] : ev.entries()) {
        CHECK(table().prime(var) == it->first);
        CHECK(e == it->second);
        ++it;
      }
    }
  }

  TEST_CASE("spf sieve is consistent") {
    PrimeTable small(1000);
    for (std::uint32_t n = 2; n <= 1000; ++n) {
      const auto f = oracle::trial_factor(n);
      CHECK(small.smallest_prime_factor(n) == f.begin()->first);
    }
  }

  TEST_CASE("extension beyond the sieve") {
    PrimeTable small(100, 100000);
    CHECK(small.covered() <= 100);
    CHECK(small.prime(1000) == 7919);
    CHECK(small.covered() >= 7919);
    CHECK(small.index_of(99991) == oracle::prime_index(99991));
    // 99991^2 factors by trial division over extended primes
    CHECK(small.factorize(mpz_class(99991) * 99991) ==
          ExponentVector({{oracle::prime_index(99991), 2}}));
  }

  TEST_CASE("extension ceiling is enforced") {
    PrimeTable small(100, 1000);
    // 1009 * 1013 needs primes past the ceiling
    CHECK_THROWS_AS(small.factorize(1009 * 1013), TableExtensionError);
    CHECK_THROWS_AS(small.prime(500), TableExtensionError);
  }

  TEST_CASE("concurrent readers while the table extends") {
    PrimeTable shared(1000, 2'000'000);
    std::vector<std::thread> workers;
    std::vector<int> ok(8, 0);
    for (int w = 0; w < 8; ++w) {
      workers.emplace_back([&, w] {
        int good = 0;
        for (std::uint32_t j = 1; j <= 3000; j += 37 + w) {
          good += oracle::is_prime(shared.prime(j)) ? 1 : 0;
          good -= shared.index_of(shared.prime(j)) == j ? 0 : 1000;
        }
        ok[w] = good;
      });
    }
    for (auto& t : workers) t.join();
    for (int v : ok) CHECK(v > 0);
  }
}

TEST_SUITE("lift") {
  TEST_CASE("lift examples") {
    CHECK(lift(table(), dp({{2, 1}, {3, -1}})) == z(1) - z(2));
    CHECK(lift(table(), dp({{1, 1}})) == th::cst(1));
    CHECK(lift(table(), dp({{12, 1}})) == MultiPoly::monomial({{1, 2}, {2, 1}}));
  }

  TEST_CASE("unlift examples") {
    CHECK(unlift(table(), z(1) * z(2)) == dp({{6, 1}}));
    CHECK(unlift(table(), th::cst(1)) == dp({{1, 1}}));
    CHECK(unlift(table(), MultiPoly::monomial({{1, 2}, {2, 1}})) == dp({{12, 1}}));
  }

  TEST_CASE("unlift handles frequencies past 64 bits") {
    const auto F = MultiPoly::monomial({{1, 70}, {3, 5}});
    const auto f = unlift(table(), F);
    mpz_class expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 2, 70);
    expected *= 3125;
    REQUIRE(f.size() == 1);
    CHECK(f.terms().begin()->first == expected);
    CHECK(lift(table(), f) == F);
  }

  TEST_CASE("section examples") {
    CHECK(section(z(1) - z(2) + z(4), 3) == z(1) - z(2));
    CHECK(section(th::cst(5) + z(1) * z(3), 0) == th::cst(5));
    CHECK(section(z(1) - z(2), 3) == z(1) - z(2));
  }

  TEST_CASE("property: round trip both ways") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 200; ++trial) {
      const auto f = gen::dirichlet(rng, 10000, 50);
      CHECK(unlift(table(), lift(table(), f)) == f);
      const auto F = gen::multi(rng, 6, 4, 10);
      CHECK(lift(table(), unlift(table(), F)) == F);
    }
  }

  TEST_CASE("property: lift is multiplicative and additive") {
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 100; ++trial) {
      const auto f = gen::dirichlet(rng, 2000, 12);
      const auto g = gen::dirichlet(rng, 2000, 12);
      CHECK(lift(table(), f * g) == lift(table(), f) * lift(table(), g));
      CHECK(lift(table(), f + g) == lift(table(), f) + lift(table(), g));
    }
  }

  TEST_CASE("property: sections") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 100; ++trial) {
      const auto F = gen::multi(rng, 6, 3, 10);
      for (std::uint32_t m = 0; m <= 6; ++m) {
        for (std::uint32_t l = m; l <= 6; ++l) {
          CHECK(section(section(F, l), m) == section(F, m));
        }
      }
      CHECK(section(F, F.max_var()) == F);
      const auto f = gen::dirichlet(rng, 3000, 15);
      for (std::uint32_t m = 0; m <= 5; ++m) {
        CHECK(lift(table(), smooth_restrict(table(), f, m)) == section(lift(table(), f), m));
      }
    }
  }
}

TEST_SUITE("section bound") {
  TEST_CASE("single far variable") {
    const auto r = section_gap_check(table(), dp({{7, 1}}), 3, 4, 1000, 1);
    CHECK(r.samples == 1000);
    CHECK(r.violations == 0);
    CHECK(r.worst_margin >= 0.0);
  }

  TEST_CASE("constant passes with zero gap") {
    const auto r = section_gap_check(table(), dp({{1, 3}}), 1, 5, 500, 2);
    CHECK(r.violations == 0);
  }

  TEST_CASE("mixed support") {
    const auto r = section_gap_check(table(), dp({{2, 1}, {7, 1}}), 3, 4, 1000, 3);
    CHECK(r.violations == 0);
    CHECK(r.worst_margin >= 0.0);
    CHECK(r.worst_margin <= 2.0);
  }

  TEST_CASE("preconditions") {
    CHECK_THROWS_AS(section_gap_check(table(), dp({{2, 1}}), 3, 3, 10, 0), ValidationError);
    CHECK_THROWS_AS(section_gap_check(table(), dp({{2, 1}}), 1, 3, 0, 0), ValidationError);
  }

  TEST_CASE("seeded and reproducible") {
    const auto f = dp({{2, 1}, {5, -2}, {13, 1}, {30, 3}});
    const auto a = section_gap_check(table(), f, 2, 6, 300, 9);
    const auto b = section_gap_check(table(), f, 2, 6, 300, 9);
    CHECK(a.worst_margin == b.worst_margin);
  }

  TEST_CASE("polydisk samples lie in the closed polydisk") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 1000; ++i) {
      for (const auto& c : sample_polydisk(rng, 4)) CHECK(std::abs(c) <= 1.0);
    }
  }
}
