#include "bohrkit/coefficient.hpp"

#include <regex>
#include <stdexcept>

#include "bohrkit/errors.hpp"

namespace bohrkit {

namespace {

mpq_class parse_rational(const std::string& text) {
  static const std::regex kRational(R"([+-]?[0-9]+(/[0-9]+)?)");
  if (!std::regex_match(text, kRational)) {
    throw ValidationError("not a rational \"p\" or \"p/q\": \"" + text + "\"");
  }
  const std::string body = text[0] == '+' ? text.substr(1) : text;
  mpq_class q;
  if (body.find('/') != std::string::npos) {
    const auto slash = body.find('/');
    const mpz_class den(body.substr(slash + 1), 10);
    if (den == 0) throw ValidationError("zero denominator: \"" + text + "\"");
    q = mpq_class(mpz_class(body.substr(0, slash), 10), den);
    q.canonicalize();
  } else {
    q = mpq_class(mpz_class(body, 10));
  }
  return q;
}

}  // namespace

CoefficientQ::CoefficientQ(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
  re_.canonicalize();
  im_.canonicalize();
}

CoefficientQ CoefficientQ::parse(const std::string& re, const std::string& im) {
  return {parse_rational(re), parse_rational(im)};
}

CoefficientQ CoefficientQ::inverse() const {
  const mpq_class n = norm();
  if (sgn(n) == 0) throw std::domain_error("inverse of zero coefficient");
  return {re_ / n, -im_ / n};
}

CoefficientQ& CoefficientQ::operator+=(const CoefficientQ& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

CoefficientQ& CoefficientQ::operator-=(const CoefficientQ& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

CoefficientQ& CoefficientQ::operator*=(const CoefficientQ& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const CoefficientQ& c) {
  os << to_string(c.re_);
  if (sgn(c.im_) != 0) os << (sgn(c.im_) > 0 ? "+" : "") << to_string(c.im_) << "i";
  return os;
}

std::string to_string(const mpq_class& q) { return q.get_str(10); }

}  // namespace bohrkit
