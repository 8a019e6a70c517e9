#include "bohrkit/bohr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "bohrkit/errors.hpp"

namespace bohrkit {

MultiPoly lift(const PrimeTable& primes, const DirichletPolynomial& f) {
  MultiPoly F;
  for (const auto& [n, c] : f.terms()) F.add_term(primes.factorize(n), c);
  return F;
}

DirichletPolynomial unlift(const PrimeTable& primes, const MultiPoly& F) {
  DirichletPolynomial f;
  mpz_class n;
  mpz_class power;
  for (const auto& [e, c] : F.terms()) {
    n = 1;
    for (const auto& [var, k] : e.entries()) {
      mpz_ui_pow_ui(power.get_mpz_t(), primes.prime(var), k);
      n *= power;
    }
    f.add_term(n, c);
  }
  return f;
}

MultiPoly section(const MultiPoly& F, std::uint32_t m) {
  MultiPoly out;
  for (const auto& [e, c] : F.terms()) {
    if (e.max_var() <= m) out.add_term(e, c);
  }
  return out;
}

DirichletPolynomial smooth_restrict(const PrimeTable& primes, const DirichletPolynomial& f,
                                    std::uint32_t m) {
  DirichletPolynomial out;
  mpz_class r;
  for (const auto& [n, c] : f.terms()) {
    r = n;
    for (std::uint32_t j = 1; j <= m && r > 1; ++j) {
      const auto p = primes.prime(j);
      while (mpz_divisible_ui_p(r.get_mpz_t(), p)) mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), p);
    }
    if (r == 1) out.add_term(n, c);
  }
  return out;
}

std::vector<std::complex<double>> sample_polydisk(std::mt19937_64& rng, std::uint32_t count) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::complex<double>> z(count);
  for (auto& zj : z) {
    const double radius = std::sqrt(unit(rng));
    const double angle = 2.0 * std::numbers::pi * unit(rng);
    zj = std::polar(radius, angle);
  }
  return z;
}

CheckReport section_gap_check(const PrimeTable& primes, const DirichletPolynomial& f,
                              std::uint32_t m, std::uint32_t ell, std::uint64_t sample_count,
                              std::uint64_t seed) {
  if (m >= ell) throw ValidationError("section_gap_check requires m < ell");
  if (sample_count < 1) throw ValidationError("section_gap_check requires at least one sample");
  constexpr double kSlack = 1e-9;

  const MultiPoly F = lift(primes, f);
  const double bound_norm = l1_norm(f);
  std::mt19937_64 rng(seed);
  CheckReport report;
  report.worst_margin = std::numeric_limits<double>::infinity();
  for (std::uint64_t i = 0; i < sample_count; ++i) {
    const auto z = sample_polydisk(rng, ell);
    const std::span<const std::complex<double>> full(z);
    const double gap = std::abs(evaluate_unchecked(F, full.first(m)) - evaluate_unchecked(F, full));
    double tail = 0.0;
    for (std::uint32_t j = m; j < ell; ++j) tail = std::max(tail, std::abs(z[j]));
    const double margin = 2.0 * bound_norm * tail - gap;
    report.worst_margin = std::min(report.worst_margin, margin);
    if (margin < -kSlack) ++report.violations;
    ++report.samples;
  }
  return report;
}

}  // namespace bohrkit
