#include "bohrkit/syzygy.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "bohrkit/errors.hpp"
#include "bohrkit/linalg.hpp"

namespace bohrkit {

namespace {

struct SlotMonomialLess {
  bool operator()(const std::pair<std::size_t, ExponentVector>& a,
                  const std::pair<std::size_t, ExponentVector>& b) const {
    if (a.first != b.first) return a.first < b.first;
    return GrlexLess{}(a.second, b.second);
  }
};

void check_budget(std::size_t rows, std::size_t cols, const SyzygyOptions& options) {
  if (rows != 0 && cols > options.matrix_budget / rows) {
    throw BudgetError("coefficient matrix " + std::to_string(rows) + "x" + std::to_string(cols) +
                      " exceeds the matrix budget");
  }
}

// Column c holds the (slot, monomial) coefficients of images[c]; rows is
// filled with the row keys in ascending order.
template <typename Image>
DenseMatrix assemble(const std::vector<Image>& images,
                     std::map<std::pair<std::size_t, ExponentVector>, std::size_t,
                              SlotMonomialLess>& rows,
                     const SyzygyOptions& options) {
  for (const auto& image : images) {
    for (const auto& [slot, poly] : image) {
      for (const auto& [e, c] : poly.terms()) rows.try_emplace({slot, e}, 0);
    }
  }
  std::size_t r = 0;
  for (auto& [key, idx] : rows) idx = r++;
  check_budget(rows.size(), images.size(), options);
  DenseMatrix m(rows.size(), images.size());
  for (std::size_t col = 0; col < images.size(); ++col) {
    for (const auto& [slot, poly] : images[col]) {
      for (const auto& [e, c] : poly.terms()) m.at(rows.at({slot, e}), col) += c;
    }
  }
  return m;
}

std::uint32_t vars_of(const RelationVector& v) {
  std::uint32_t m = 0;
  for (const auto& p : v.components) m = std::max(m, p.max_var());
  return m;
}

}  // namespace

bool is_relation(const RelationVector& g, std::span<const MultiPoly> f) {
  if (g.components.size() != f.size()) return false;
  MultiPoly sum;
  for (std::size_t i = 0; i < f.size(); ++i) sum += g.components[i] * f[i];
  return sum.is_zero();
}

RelationBasis relation_kernel(std::span<const MultiPoly> f, std::uint32_t d,
                              std::uint32_t num_vars, const SyzygyOptions& options) {
  if (f.empty()) throw ValidationError("relation_kernel needs k >= 1");
  std::uint32_t m = num_vars;
  for (const auto& fi : f) m = std::max(m, fi.max_var());
  const auto monomials = monomials_up_to(m, d);
  check_budget(1, f.size() * monomials.size(), options);

  // Column (i, nu) maps to nu * f_i, all landing in the single output slot 0.
  using Image = std::vector<std::pair<std::size_t, MultiPoly>>;
  std::vector<Image> images;
  images.reserve(f.size() * monomials.size());
  for (const auto& fi : f) {
    for (const auto& nu : monomials) images.push_back({{0, MultiPoly::monomial(nu) * fi}});
  }
  std::map<std::pair<std::size_t, ExponentVector>, std::size_t, SlotMonomialLess> rows;
  const DenseMatrix a = assemble(images, rows, options);

  RelationBasis out;
  out.tuple.assign(f.begin(), f.end());
  out.degree_cap = d;
  out.num_vars = m;
  std::vector<std::vector<CoefficientQ>> kernel;
  if (a.rows() == 0) {
    // Every f_i is zero: every coefficient vector is a relation.
    for (std::size_t c = 0; c < images.size(); ++c) {
      std::vector<CoefficientQ> x(images.size());
      x[c] = CoefficientQ(1);
      kernel.push_back(std::move(x));
    }
  } else {
    kernel = kernel_basis(a);
  }
  for (const auto& x : kernel) {
    RelationVector g;
    g.components.resize(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t k = 0; k < monomials.size(); ++k) {
        g.components[i].add_term(monomials[k], x[i * monomials.size() + k]);
      }
    }
    out.basis.push_back(std::move(g));
  }
  out.dimension = out.basis.size();
  return out;
}

RelationVector koszul_oracle(const MultiPoly& fi, const MultiPoly& fj, std::size_t k,
                             std::size_t i, std::size_t j) {
  if (!(1 <= i && i < j && j <= k)) throw ValidationError("koszul_oracle needs 1 <= i < j <= k");
  RelationVector v;
  v.components.resize(k);
  v.components[i - 1] = fj;
  v.components[j - 1] = -fi;
  return v;
}

MembershipResult membership_test(const RelationVector& candidate,
                                 std::span<const RelationVector> generators,
                                 std::uint32_t multiplier_cap, std::uint32_t num_vars,
                                 const SyzygyOptions& options) {
  const std::size_t k = candidate.components.size();
  std::uint32_t m = std::max(num_vars, vars_of(candidate));
  for (const auto& gen : generators) {
    if (gen.components.size() != k) throw ValidationError("generator length differs from candidate");
    m = std::max(m, vars_of(gen));
  }
  MembershipResult result;
  if (generators.empty()) {
    result.member = std::all_of(candidate.components.begin(), candidate.components.end(),
                                [](const MultiPoly& p) { return p.is_zero(); });
    return result;
  }

  const auto monomials = monomials_up_to(m, multiplier_cap);
  check_budget(1, generators.size() * monomials.size(), options);
  using Image = std::vector<std::pair<std::size_t, MultiPoly>>;
  std::vector<Image> images;
  for (const auto& gen : generators) {
    for (const auto& mu : monomials) {
      Image img;
      const MultiPoly mono = MultiPoly::monomial(mu);
      for (std::size_t s = 0; s < k; ++s) img.emplace_back(s, mono * gen.components[s]);
      images.push_back(std::move(img));
    }
  }
  Image target;
  for (std::size_t s = 0; s < k; ++s) target.emplace_back(s, candidate.components[s]);
  images.push_back(target);

  std::map<std::pair<std::size_t, ExponentVector>, std::size_t, SlotMonomialLess> rows;
  const DenseMatrix all = assemble(images, rows, options);
  const std::size_t unknowns = images.size() - 1;
  DenseMatrix a(all.rows(), unknowns);
  std::vector<CoefficientQ> b(all.rows());
  for (std::size_t r = 0; r < all.rows(); ++r) {
    for (std::size_t c = 0; c < unknowns; ++c) a.at(r, c) = all.at(r, c);
    b[r] = all.at(r, unknowns);
  }
  const auto x = all.rows() == 0 ? std::optional(std::vector<CoefficientQ>(unknowns))
                                 : solve_linear(a, b);
  if (!x) return result;
  result.member = true;
  result.multipliers.resize(generators.size());
  for (std::size_t t = 0; t < generators.size(); ++t) {
    for (std::size_t q = 0; q < monomials.size(); ++q) {
      result.multipliers[t].add_term(monomials[q], (*x)[t * monomials.size() + q]);
    }
  }
  return result;
}

}  // namespace bohrkit
