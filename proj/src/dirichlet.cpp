#include "bohrkit/dirichlet.hpp"

#include <cmath>
#include <numbers>

#include "bohrkit/errors.hpp"

namespace bohrkit {

DirichletPolynomial DirichletPolynomial::term(const mpz_class& n, const CoefficientQ& c) {
  DirichletPolynomial f;
  f.add_term(n, c);
  return f;
}

void DirichletPolynomial::add_term(const mpz_class& n, const CoefficientQ& c) {
  if (n < 1) throw ValidationError("Dirichlet frequency must be >= 1, got " + n.get_str());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(n, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CoefficientQ DirichletPolynomial::coefficient(const mpz_class& n) const {
  const auto it = terms_.find(n);
  return it == terms_.end() ? CoefficientQ() : it->second;
}

DirichletPolynomial& DirichletPolynomial::operator+=(const DirichletPolynomial& o) {
  for (const auto& [n, c] : o.terms_) add_term(n, c);
  return *this;
}

DirichletPolynomial& DirichletPolynomial::operator-=(const DirichletPolynomial& o) {
  for (const auto& [n, c] : o.terms_) add_term(n, -c);
  return *this;
}

DirichletPolynomial operator-(const DirichletPolynomial& a) {
  DirichletPolynomial r;
  for (const auto& [n, c] : a.terms_) r.terms_.emplace(n, -c);
  return r;
}

DirichletPolynomial operator*(const DirichletPolynomial& a, const DirichletPolynomial& b) {
  DirichletPolynomial r;
  mpz_class n;
  for (const auto& [na, ca] : a.terms_) {
    for (const auto& [nb, cb] : b.terms_) {
      n = na * nb;
      r.add_term(n, ca * cb);
    }
  }
  return r;
}

DirichletPolynomial operator*(const CoefficientQ& c, const DirichletPolynomial& a) {
  DirichletPolynomial r;
  if (c.is_zero()) return r;
  for (const auto& [n, ca] : a.terms_) r.terms_.emplace(n, c * ca);
  return r;
}

double log_of(const mpz_class& n) {
  if (n.fits_ulong_p()) return std::log(static_cast<double>(n.get_ui()));
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2;
}

std::complex<double> evaluate(const DirichletPolynomial& f, std::complex<double> s) {
  std::complex<double> sum{};
  for (const auto& [n, c] : f.terms()) {
    sum += c.to_complex() * std::exp(-s * log_of(n));
  }
  return sum;
}

double l1_norm(const DirichletPolynomial& f) {
  double sum = 0.0;
  for (const auto& [n, c] : f.terms()) sum += c.abs();
  return sum;
}

}  // namespace bohrkit
