#pragma once

#include <complex>
#include <ostream>
#include <string>

#include <gmpxx.h>

namespace bohrkit {

// Exact Gaussian rational re + i*im. Both parts are kept canonical
// (reduced, positive denominator) so that == is structural.
class CoefficientQ {
 public:
  CoefficientQ() = default;
  CoefficientQ(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  CoefficientQ(mpq_class re, mpq_class im = 0);

  // Parses "p", "-p", "p/q" for each part. Throws ValidationError.
  static CoefficientQ parse(const std::string& re, const std::string& im);

  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  CoefficientQ conj() const { return {re_, -im_}; }
  // Squared modulus, exact.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }
  // Throws std::domain_error for zero.
  CoefficientQ inverse() const;

  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }
  double abs() const { return std::abs(to_complex()); }

  CoefficientQ& operator+=(const CoefficientQ& o);
  CoefficientQ& operator-=(const CoefficientQ& o);
  CoefficientQ& operator*=(const CoefficientQ& o);
  CoefficientQ& operator/=(const CoefficientQ& o) { return *this *= o.inverse(); }

  friend CoefficientQ operator+(CoefficientQ a, const CoefficientQ& b) { return a += b; }
  friend CoefficientQ operator-(CoefficientQ a, const CoefficientQ& b) { return a -= b; }
  friend CoefficientQ operator*(CoefficientQ a, const CoefficientQ& b) { return a *= b; }
  friend CoefficientQ operator/(CoefficientQ a, const CoefficientQ& b) { return a /= b; }
  friend CoefficientQ operator-(const CoefficientQ& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const CoefficientQ& a, const CoefficientQ& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  friend std::ostream& operator<<(std::ostream& os, const CoefficientQ& c);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

// Canonical decimal text of a rational: "p" or "p/q".
std::string to_string(const mpq_class& q);

}  // namespace bohrkit
