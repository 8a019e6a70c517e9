#include "bohrkit/multipoly.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "bohrkit/errors.hpp"

namespace bohrkit {

ExponentVector::ExponentVector(std::initializer_list<Entry> entries)
    : ExponentVector(std::vector<Entry>(entries)) {}

ExponentVector::ExponentVector(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].first == 0) throw ValidationError("variable indices are 1-based; got 0");
    if (i > 0 && entries[i].first == entries[i - 1].first) {
      throw ValidationError("variable z" + std::to_string(entries[i].first) + " repeated");
    }
  }
  std::erase_if(entries, [](const Entry& e) { return e.second == 0; });
  entries_ = std::move(entries);
}

std::uint32_t ExponentVector::exponent(std::uint32_t var) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), Entry{var, 0});
  return it != entries_.end() && it->first == var ? it->second : 0;
}

std::uint64_t ExponentVector::degree() const {
  std::uint64_t d = 0;
  for (const auto& [v, e] : entries_) d += e;
  return d;
}

ExponentVector operator+(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r;
  r.entries_.reserve(a.entries_.size() + b.entries_.size());
  auto i = a.entries_.begin();
  auto j = b.entries_.begin();
  while (i != a.entries_.end() || j != b.entries_.end()) {
    if (j == b.entries_.end() || (i != a.entries_.end() && i->first < j->first)) {
      r.entries_.push_back(*i++);
    } else if (i == a.entries_.end() || j->first < i->first) {
      r.entries_.push_back(*j++);
    } else {
      r.entries_.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return r;
}

bool GrlexLess::operator()(const ExponentVector& a, const ExponentVector& b) const {
  const auto da = a.degree();
  const auto db = b.degree();
  if (da != db) return da < db;
  constexpr auto kEnd = std::numeric_limits<std::uint32_t>::max();
  const auto ea = a.entries();
  const auto eb = b.entries();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ea.size() || j < eb.size()) {
    const auto va = i < ea.size() ? ea[i].first : kEnd;
    const auto vb = j < eb.size() ? eb[j].first : kEnd;
    if (va == vb) {
      if (ea[i].second != eb[j].second) return ea[i].second < eb[j].second;
      ++i;
      ++j;
    } else {
      // The side holding the lower-index variable is the larger monomial.
      return vb < va;
    }
  }
  return false;
}

EvalPoint::EvalPoint(std::vector<std::complex<double>> coords) : coords_(std::move(coords)) {
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (!(std::abs(coords_[j]) <= 1.0 + kSlack)) {
      throw ValidationError("coordinate z" + std::to_string(j + 1) +
                            " lies outside the closed unit disk");
    }
  }
}

MultiPoly MultiPoly::constant(const CoefficientQ& c) { return monomial(ExponentVector(), c); }

MultiPoly MultiPoly::monomial(const ExponentVector& e, const CoefficientQ& c) {
  MultiPoly p;
  p.add_term(e, c);
  return p;
}

void MultiPoly::add_term(const ExponentVector& e, const CoefficientQ& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

CoefficientQ MultiPoly::coefficient(const ExponentVector& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? CoefficientQ() : it->second;
}

std::uint32_t MultiPoly::max_var() const {
  std::uint32_t m = 0;
  for (const auto& [e, c] : terms_) m = std::max(m, e.max_var());
  return m;
}

std::uint64_t MultiPoly::degree() const {
  // grlex keeps the highest-degree monomials last
  return terms_.empty() ? 0 : terms_.rbegin()->first.degree();
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator-(const MultiPoly& a) {
  MultiPoly r;
  for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

MultiPoly operator*(const CoefficientQ& c, const MultiPoly& a) {
  MultiPoly r;
  if (c.is_zero()) return r;
  for (const auto& [e, ca] : a.terms_) r.terms_.emplace(e, c * ca);
  return r;
}

namespace {

std::complex<double> ipow(std::complex<double> z, std::uint32_t e) {
  std::complex<double> r{1.0, 0.0};
  while (e > 0) {
    if (e & 1U) r *= z;
    z *= z;
    e >>= 1U;
  }
  return r;
}

}  // namespace

std::complex<double> evaluate_unchecked(const MultiPoly& f,
                                        std::span<const std::complex<double>> coords) {
  std::complex<double> sum{};
  for (const auto& [e, c] : f.terms()) {
    std::complex<double> mono{1.0, 0.0};
    for (const auto& [v, k] : e.entries()) {
      if (v > coords.size()) {
        mono = 0.0;
        break;
      }
      mono *= ipow(coords[v - 1], k);
    }
    sum += c.to_complex() * mono;
  }
  return sum;
}

std::complex<double> evaluate(const MultiPoly& f, const EvalPoint& z) {
  return evaluate_unchecked(f, z.coords());
}

double l1_norm(const MultiPoly& f) {
  double sum = 0.0;
  for (const auto& [e, c] : f.terms()) sum += c.abs();
  return sum;
}

std::vector<ExponentVector> monomials_up_to(std::uint32_t m, std::uint32_t d) {
  std::vector<ExponentVector> out;
  std::vector<ExponentVector::Entry> current;
  // Enumerate exponent tuples for variables m, m-1, ..., 1 with a degree cap.
  auto recurse = [&](auto&& self, std::uint32_t var, std::uint32_t remaining) -> void {
    if (var == 0) {
      out.emplace_back(current);
      return;
    }
    for (std::uint32_t e = 0; e <= remaining; ++e) {
      if (e > 0) current.emplace_back(var, e);
      self(self, var - 1, remaining - e);
      if (e > 0) current.pop_back();
    }
  };
  recurse(recurse, m, d);
  std::sort(out.begin(), out.end(), GrlexLess{});
  return out;
}

}  // namespace bohrkit
