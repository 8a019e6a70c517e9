#include "bohrkit/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace bohrkit {

namespace {

bool is_gaussian_integer(const CoefficientQ& c) {
  return c.real().get_den() == 1 && c.imag().get_den() == 1;
}

CoefficientQ exact_quotient(const CoefficientQ& a, const CoefficientQ& b) {
  CoefficientQ q = a / b;
  if (!is_gaussian_integer(q)) throw std::logic_error("fraction-free elimination lost exactness");
  return q;
}

void scale_to_integers(DenseMatrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class lcm = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(r, c).real().get_den_mpz_t());
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(r, c).imag().get_den_mpz_t());
    }
    if (lcm == 1) continue;
    const CoefficientQ factor{mpq_class(lcm)};
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) *= factor;
  }
}

}  // namespace

Echelon fraction_free_echelon(DenseMatrix m) {
  scale_to_integers(m);
  Echelon out;
  CoefficientQ prev(1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m.at(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(row, c));
    }
    const CoefficientQ pivot = m.at(row, col);
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      const CoefficientQ lead = m.at(r, col);
      for (std::size_t c = col + 1; c < m.cols(); ++c) {
        CoefficientQ v = pivot * m.at(r, c) - lead * m.at(row, c);
        m.at(r, c) = exact_quotient(v, prev);
      }
      m.at(r, col) = CoefficientQ();
    }
    prev = pivot;
    out.pivots.push_back(col);
    ++row;
  }
  out.matrix = std::move(m);
  return out;
}

namespace {

// Back substitution through an echelon form with the given free-variable values.
std::vector<CoefficientQ> back_substitute(const Echelon& e, std::vector<CoefficientQ> x,
                                          const std::vector<CoefficientQ>* rhs) {
  for (std::size_t k = e.pivots.size(); k-- > 0;) {
    const std::size_t p = e.pivots[k];
    CoefficientQ acc = rhs ? (*rhs)[k] : CoefficientQ();
    for (std::size_t c = p + 1; c < x.size(); ++c) {
      if (!x[c].is_zero()) acc -= e.matrix.at(k, c) * x[c];
    }
    x[p] = acc / e.matrix.at(k, p);
  }
  return x;
}

}  // namespace

void reduce_rows(std::vector<std::vector<CoefficientQ>>& rows) {
  if (rows.empty()) return;
  const std::size_t cols = rows.front().size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
    std::size_t piv = row;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[row]);
    const CoefficientQ inv = rows[row][col].inverse();
    for (auto& v : rows[row]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == row || rows[r][col].is_zero()) continue;
      const CoefficientQ f = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[row][c];
    }
    ++row;
  }
  rows.resize(row);
}

std::vector<std::vector<CoefficientQ>> kernel_basis(const DenseMatrix& a) {
  const Echelon e = fraction_free_echelon(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (const auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<CoefficientQ>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<CoefficientQ> x(a.cols());
    x[free] = CoefficientQ(1);
    basis.push_back(back_substitute(e, std::move(x), nullptr));
  }
  reduce_rows(basis);
  return basis;
}

std::optional<std::vector<CoefficientQ>> solve_linear(const DenseMatrix& a,
                                                      const std::vector<CoefficientQ>& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_linear: size mismatch");
  DenseMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  const Echelon e = fraction_free_echelon(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  std::vector<CoefficientQ> rhs(e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k) rhs[k] = e.matrix.at(k, a.cols());
  return back_substitute(e, std::vector<CoefficientQ>(a.cols()), &rhs);
}

}  // namespace bohrkit
