#pragma once

#include <complex>
#include <cstddef>
#include <map>

#include <gmpxx.h>

#include "bohrkit/coefficient.hpp"

namespace bohrkit {

// Finite Dirichlet polynomial  sum_n a_n n^{-s}.
//
// Terms are keyed by frequency n >= 1 (arbitrary precision) and iterate in
// ascending n. Zero coefficients are never stored, so the zero polynomial
// has empty support.
class DirichletPolynomial {
 public:
  using Terms = std::map<mpz_class, CoefficientQ>;

  DirichletPolynomial() = default;

  static DirichletPolynomial one() { return term(1, CoefficientQ(1)); }
  // c * n^{-s}. Throws ValidationError for n < 1.
  static DirichletPolynomial term(const mpz_class& n, const CoefficientQ& c);

  // Accumulates c into the coefficient of n^{-s}, dropping it if it cancels.
  void add_term(const mpz_class& n, const CoefficientQ& c);

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  CoefficientQ coefficient(const mpz_class& n) const;

  DirichletPolynomial& operator+=(const DirichletPolynomial& o);
  DirichletPolynomial& operator-=(const DirichletPolynomial& o);

  friend DirichletPolynomial operator+(DirichletPolynomial a, const DirichletPolynomial& b) {
    return a += b;
  }
  friend DirichletPolynomial operator-(DirichletPolynomial a, const DirichletPolynomial& b) {
    return a -= b;
  }
  friend DirichletPolynomial operator-(const DirichletPolynomial& a);
  // Dirichlet convolution: (f g)_n = sum_{de = n} f_d g_e. Exact.
  friend DirichletPolynomial operator*(const DirichletPolynomial& a, const DirichletPolynomial& b);
  friend DirichletPolynomial operator*(const CoefficientQ& c, const DirichletPolynomial& a);

  friend bool operator==(const DirichletPolynomial& a, const DirichletPolynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

// sum a_n exp(-s ln n) in double precision.
std::complex<double> evaluate(const DirichletPolynomial& f, std::complex<double> s);

// Coefficient absolute sum. Upper bound for sup |f| on Re s > 0.
double l1_norm(const DirichletPolynomial& f);

// Natural log of a positive big integer, in double precision.
double log_of(const mpz_class& n);

}  // namespace bohrkit
