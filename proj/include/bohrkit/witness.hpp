#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bohrkit/dirichlet.hpp"
#include "bohrkit/multipoly.hpp"
#include "bohrkit/primes.hpp"

namespace bohrkit {

// (p_1^{-s}, ..., p_n^{-s}, g) with g = prod_{j<=n} (1 - (p_j p_{n+j})^{-s}).
// Unimodular, yet not reducible.
struct WitnessTuple {
  std::uint32_t n = 0;
  std::vector<DirichletPolynomial> entries;

  const DirichletPolynomial& g() const { return entries.back(); }
};

// Throws ValidationError for n < 1.
WitnessTuple make_witness_tuple(const PrimeTable& primes, std::uint32_t n);

// g_1..g_n with g = 1 + sum_j p_j^{-s} g_j exactly. Each non-constant term
// c m^{-s} of g goes to the smallest j with p_j | m, contributing
// c (m/p_j)^{-s} to g_j.
std::vector<DirichletPolynomial> expand_cofactors(const PrimeTable& primes, std::uint32_t n);

struct BezoutCertificate {
  std::vector<DirichletPolynomial> tuple;
  std::vector<DirichletPolynomial> cofactors;
  // sum b_i f_i - 1; the certificate holds iff this is empty.
  DirichletPolynomial residual;
};

// Builds a certificate with an exactly computed residual. Throws
// ValidationError when the lengths differ.
BezoutCertificate make_certificate(std::vector<DirichletPolynomial> tuple,
                                   std::vector<DirichletPolynomial> cofactors);

// Recomputes the residual from tuple and cofactors; ignores the stored one.
bool verify_bezout(const BezoutCertificate& cert);

// The witness tuple with cofactors (-g_1, ..., -g_n, 1).
BezoutCertificate witness_certificate(const PrimeTable& primes, std::uint32_t n);

// Phi(z) = -h(z_1..z_n, conj z_1..conj z_n, 0, ...) prod_k (1 - |z_k|^2)
// inside the open polydisk and 0 elsewhere; continuous on C^n. Each h_j may
// use variables 1..2n only (ValidationError otherwise).
std::vector<std::complex<double>> phi_map(std::span<const MultiPoly> h,
                                          std::span<const std::complex<double>> z);

struct FixedPointOptions {
  double tol = 1e-8;
  std::uint64_t max_iter = 100000;  // per start
  std::uint64_t seed = 0;
  std::uint32_t starts = 16;
};

struct FixedPointReport {
  std::uint32_t n = 0;
  std::vector<std::complex<double>> z_star;
  // ||Phi(z*) - z*||_2 and its coordinates |Phi_j(z*) - z*_j|.
  double phi_residual = 0.0;
  std::vector<double> phi_residuals;
  // |zeta_j + (h_j g)(zeta, conj zeta, 0, ...)|; filled by obstruction_report.
  std::vector<double> eq_residuals;
  double eq_bound = 0.0;
  bool in_open_polydisk = false;
  std::uint32_t start_index = 0;
  std::uint64_t iterations = 0;
  std::string method;
};

// Damped iteration z <- (1 - lambda) z + lambda Phi(z) from options.starts
// seeded starts (the first is the origin); lambda starts at 0.5, is halved
// whenever the residual would grow and recovers slowly on success. A start
// that stagnates above tol falls back to Nelder-Mead on ||Phi(z) - z||^2.
// Every candidate is polished with finite-difference Newton steps that are
// kept only when they lower the residual. Returns the best start (ties go
// to the lower index); throws ConvergenceError when none reaches tol.
FixedPointReport find_fixed_point(std::span<const MultiPoly> h, const FixedPointOptions& options);

// Fixed point of Phi for h plus the residuals of
//   zeta_j + (h_j g)(zeta_1..zeta_n, conj zeta_1..conj zeta_n, 0, ...) = 0
// where g is the lifted last witness entry, so g(zeta, conj zeta) =
// prod (1 - |zeta_k|^2). Residuals within eq_bound at a point of the open
// polydisk exhibit a common zero of (z_j + g h_j)_j, so no Bezout identity
// exists for that h.
FixedPointReport obstruction_report(const PrimeTable& primes, std::uint32_t n,
                                    std::span<const MultiPoly> h,
                                    const FixedPointOptions& options);

// The claim obstruction_report makes: an interior point whose residuals
// all fit under eq_bound.
bool obstruction_certified(const FixedPointReport& report);

}  // namespace bohrkit
