#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bohrkit/multipoly.hpp"

namespace bohrkit {

// (g_1, ..., g_k); a relation on (f_1, ..., f_k) when sum g_i f_i = 0.
struct RelationVector {
  std::vector<MultiPoly> components;

  friend bool operator==(const RelationVector&, const RelationVector&) = default;
};

// Exact check of sum g_i f_i == 0.
bool is_relation(const RelationVector& g, std::span<const MultiPoly> f);

// The degree-<= d slice of the relation module f^perp in variables 1..m.
// At this truncation the module is always finitely generated; the slice is
// a finite-dimensional check, not a statement about H^inf(D^m).
struct RelationBasis {
  std::vector<MultiPoly> tuple;
  std::uint32_t degree_cap = 0;
  std::uint32_t num_vars = 0;
  std::vector<RelationVector> basis;
  std::size_t dimension = 0;
};

struct SyzygyOptions {
  // Largest coefficient matrix (rows * cols) either routine will build.
  std::uint64_t matrix_budget = 4'000'000;
};

// Basis of {(g_1..g_k) : sum g_i f_i = 0, deg g_i <= d} over Q(i), found by
// fraction-free elimination on the coefficient matrix whose columns are
// (slot i, monomial) pairs in slot-major, ascending-grlex order. The basis is
// returned in reduced row echelon form in those coordinates. Variables run
// over 1..max(num_vars, max_var(f)). Throws BudgetError past the budget.
RelationBasis relation_kernel(std::span<const MultiPoly> f, std::uint32_t d,
                              std::uint32_t num_vars = 0, const SyzygyOptions& options = {});

// f_j in slot i, -f_i in slot j (1-based), zero elsewhere.
RelationVector koszul_oracle(const MultiPoly& fi, const MultiPoly& fj, std::size_t k,
                             std::size_t i, std::size_t j);

struct MembershipResult {
  bool member = false;
  // alpha_t with candidate = sum alpha_t generator_t, when member.
  std::vector<MultiPoly> multipliers;
};

// Decides whether candidate = sum alpha_t generators[t] with deg alpha_t <=
// multiplier_cap, by exact linear algebra over the multiplier coefficients.
MembershipResult membership_test(const RelationVector& candidate,
                                 std::span<const RelationVector> generators,
                                 std::uint32_t multiplier_cap, std::uint32_t num_vars = 0,
                                 const SyzygyOptions& options = {});

}  // namespace bohrkit
