#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "bohrkit/coefficient.hpp"

namespace bohrkit {

// Sparse monomial exponent: sorted (variable, exponent) pairs with 1-based
// variable indices and strictly positive exponents. Empty means the constant
// monomial.
class ExponentVector {
 public:
  using Entry = std::pair<std::uint32_t, std::uint32_t>;

  ExponentVector() = default;
  // Accepts pairs in any order; zero exponents are dropped. Throws
  // ValidationError on variable index 0 or a repeated variable.
  ExponentVector(std::initializer_list<Entry> entries);
  explicit ExponentVector(std::vector<Entry> entries);

  static ExponentVector variable(std::uint32_t j, std::uint32_t e = 1) { return {{j, e}}; }

  std::span<const Entry> entries() const { return entries_; }
  bool is_constant() const { return entries_.empty(); }
  std::uint32_t exponent(std::uint32_t var) const;
  std::uint64_t degree() const;
  std::uint32_t max_var() const { return entries_.empty() ? 0 : entries_.back().first; }

  friend ExponentVector operator+(const ExponentVector& a, const ExponentVector& b);
  friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

 private:
  std::vector<Entry> entries_;
};

// Graded lexicographic order with z1 > z2 > ... ; lower total degree first.
struct GrlexLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const;
};

// A point with finitely many nonzero coordinates, coords[j-1] = z_j.
// Every coordinate must lie in the closed unit disk up to 1e-12.
class EvalPoint {
 public:
  static constexpr double kSlack = 1e-12;

  EvalPoint() = default;
  // Throws ValidationError when a coordinate leaves the closed polydisk.
  explicit EvalPoint(std::vector<std::complex<double>> coords);

  std::complex<double> operator[](std::uint32_t var) const {
    return var >= 1 && var <= coords_.size() ? coords_[var - 1] : std::complex<double>{};
  }
  std::span<const std::complex<double>> coords() const { return coords_; }

 private:
  std::vector<std::complex<double>> coords_;
};

// Sparse multivariate polynomial over the Gaussian rationals, terms kept in
// ascending grlex order with no zero coefficients.
class MultiPoly {
 public:
  using Terms = std::map<ExponentVector, CoefficientQ, GrlexLess>;

  MultiPoly() = default;
  static MultiPoly constant(const CoefficientQ& c);
  static MultiPoly monomial(const ExponentVector& e, const CoefficientQ& c = CoefficientQ(1));
  static MultiPoly variable(std::uint32_t j) { return monomial(ExponentVector::variable(j)); }

  void add_term(const ExponentVector& e, const CoefficientQ& c);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  CoefficientQ coefficient(const ExponentVector& e) const;
  std::uint32_t max_var() const;
  // Total degree; 0 for constants and for the zero polynomial.
  std::uint64_t degree() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator-(const MultiPoly& a);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const CoefficientQ& c, const MultiPoly& a);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

std::complex<double> evaluate(const MultiPoly& f, const EvalPoint& z);
// Same as above without the polydisk check; for hot loops over points that
// are unimodular or interior by construction.
std::complex<double> evaluate_unchecked(const MultiPoly& f,
                                        std::span<const std::complex<double>> coords);

double l1_norm(const MultiPoly& f);

// All exponent vectors of total degree <= d in variables 1..m, ascending grlex.
std::vector<ExponentVector> monomials_up_to(std::uint32_t m, std::uint32_t d);

}  // namespace bohrkit
