#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bohrkit/dirichlet.hpp"
#include "bohrkit/multipoly.hpp"
#include "bohrkit/primes.hpp"

namespace bohrkit {

// Bohr lift: a_n n^{-s} -> a_n prod z_j^{alpha_j(n)} with n = prod p_j^{alpha_j(n)}.
// Variable z_j corresponds to the j-th prime.
MultiPoly lift(const PrimeTable& primes, const DirichletPolynomial& f);

// Inverse of lift: monomial prod z_j^{e_j} -> frequency prod p_j^{e_j}.
DirichletPolynomial unlift(const PrimeTable& primes, const MultiPoly& F);

// m-th section: keep only monomials in z_1..z_m, i.e. substitute z^{(m)}.
MultiPoly section(const MultiPoly& F, std::uint32_t m);

// Dirichlet-side section: keep frequencies whose prime factors are among p_1..p_m.
DirichletPolynomial smooth_restrict(const PrimeTable& primes, const DirichletPolynomial& f,
                                    std::uint32_t m);

// Point of the closed polydisk in variables 1..count, with uniform |z_j|^2
// and uniform argument per coordinate.
std::vector<std::complex<double>> sample_polydisk(std::mt19937_64& rng, std::uint32_t count);

struct CheckReport {
  std::uint64_t samples = 0;
  std::uint64_t violations = 0;
  // min over samples of (bound - gap); negative only on a violation.
  double worst_margin = 0.0;
};

// Samples the closed polydisk in z_1..z_ell and checks
//   |F(z^(m)) - F(z^(ell))| <= 2 B max{|z_j| : m < j <= ell}
// with B the coefficient l1 bound, which dominates ||f||_inf. Gaps beyond the
// bound by more than 1e-9 count as violations.
CheckReport section_gap_check(const PrimeTable& primes, const DirichletPolynomial& f,
                              std::uint32_t m, std::uint32_t ell, std::uint64_t sample_count,
                              std::uint64_t seed);

}  // namespace bohrkit
