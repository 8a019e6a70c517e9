#pragma once

#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "bohrkit/dirichlet.hpp"
#include "bohrkit/multipoly.hpp"

namespace th {

// Integer-coefficient Dirichlet polynomial from (n, a_n) pairs.
inline bohrkit::DirichletPolynomial dp(std::initializer_list<std::pair<long, long>> terms) {
  bohrkit::DirichletPolynomial f;
  for (const auto& [n, c] : terms) f.add_term(mpz_class(n), bohrkit::CoefficientQ(c));
  return f;
}

struct Term {
  std::vector<bohrkit::ExponentVector::Entry> exps;
  bohrkit::CoefficientQ c;
};

inline bohrkit::MultiPoly mp(std::initializer_list<Term> terms) {
  bohrkit::MultiPoly f;
  for (const auto& t : terms) f.add_term(bohrkit::ExponentVector(t.exps), t.c);
  return f;
}

inline bohrkit::MultiPoly z(std::uint32_t j) { return bohrkit::MultiPoly::variable(j); }
inline bohrkit::MultiPoly cst(long c) { return bohrkit::MultiPoly::constant(bohrkit::CoefficientQ(c)); }

}  // namespace th
