#include "bohrkit/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "bohrkit/bohr.hpp"
#include "bohrkit/errors.hpp"
#include "bohrkit/norms.hpp"

namespace bohrkit {

WitnessTuple make_witness_tuple(const PrimeTable& primes, std::uint32_t n) {
  if (n < 1) throw ValidationError("witness tuple needs n >= 1");
  WitnessTuple w;
  w.n = n;
  DirichletPolynomial g = DirichletPolynomial::one();
  for (std::uint32_t j = 1; j <= n; ++j) {
    w.entries.push_back(DirichletPolynomial::term(primes.prime(j), CoefficientQ(1)));
    const mpz_class pair = mpz_class(primes.prime(j)) * mpz_class(primes.prime(n + j));
    g = g * (DirichletPolynomial::one() - DirichletPolynomial::term(pair, CoefficientQ(1)));
  }
  w.entries.push_back(std::move(g));
  return w;
}

std::vector<DirichletPolynomial> expand_cofactors(const PrimeTable& primes, std::uint32_t n) {
  const WitnessTuple w = make_witness_tuple(primes, n);
  std::vector<DirichletPolynomial> cofactors(n);
  for (const auto& [m, c] : w.g().terms()) {
    if (m == 1) {
      if (!c.is_one()) throw std::logic_error("witness g must have constant term 1");
      continue;
    }
    bool assigned = false;
    for (std::uint32_t j = 1; j <= n && !assigned; ++j) {
      const auto p = primes.prime(j);
      if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_class quotient;
        mpz_divexact_ui(quotient.get_mpz_t(), m.get_mpz_t(), p);
        cofactors[j - 1].add_term(quotient, c);
        assigned = true;
      }
    }
    if (!assigned) {
      throw std::logic_error("term " + m.get_str() + " of g is divisible by no p_j, j <= n");
    }
  }
  return cofactors;
}

namespace {

DirichletPolynomial bezout_residual(const std::vector<DirichletPolynomial>& tuple,
                                    const std::vector<DirichletPolynomial>& cofactors) {
  if (tuple.size() != cofactors.size()) {
    throw ValidationError("tuple and cofactors differ in length");
  }
  DirichletPolynomial sum;
  for (std::size_t i = 0; i < tuple.size(); ++i) sum += cofactors[i] * tuple[i];
  return sum - DirichletPolynomial::one();
}

}  // namespace

BezoutCertificate make_certificate(std::vector<DirichletPolynomial> tuple,
                                   std::vector<DirichletPolynomial> cofactors) {
  BezoutCertificate cert;
  cert.residual = bezout_residual(tuple, cofactors);
  cert.tuple = std::move(tuple);
  cert.cofactors = std::move(cofactors);
  return cert;
}

bool verify_bezout(const BezoutCertificate& cert) {
  return bezout_residual(cert.tuple, cert.cofactors).is_zero();
}

BezoutCertificate witness_certificate(const PrimeTable& primes, std::uint32_t n) {
  WitnessTuple w = make_witness_tuple(primes, n);
  std::vector<DirichletPolynomial> cofactors;
  for (auto& gj : expand_cofactors(primes, n)) cofactors.push_back(-gj);
  cofactors.push_back(DirichletPolynomial::one());
  return make_certificate(std::move(w.entries), std::move(cofactors));
}

namespace {

using Vec = std::vector<std::complex<double>>;

void check_phi_inputs(std::span<const MultiPoly> h) {
  const auto n = static_cast<std::uint32_t>(h.size());
  if (n < 1) throw ValidationError("Phi needs at least one component");
  for (std::uint32_t j = 0; j < n; ++j) {
    if (h[j].max_var() > 2 * n) {
      throw ValidationError("h_" + std::to_string(j + 1) + " uses a variable beyond z_" +
                            std::to_string(2 * n));
    }
  }
}

Vec phi_unchecked(std::span<const MultiPoly> h, std::span<const std::complex<double>> z) {
  const std::size_t n = h.size();
  Vec out(n);
  double weight = 1.0;
  for (const auto& zj : z) {
    const double r2 = std::norm(zj);
    if (!(r2 < 1.0)) return out;
    weight *= 1.0 - r2;
  }
  Vec point(2 * n);
  for (std::size_t j = 0; j < n; ++j) {
    point[j] = z[j];
    point[n + j] = std::conj(z[j]);
  }
  for (std::size_t j = 0; j < n; ++j) out[j] = -evaluate_unchecked(h[j], point) * weight;
  return out;
}

double residual_of(std::span<const MultiPoly> h, const Vec& z) {
  const Vec phi = phi_unchecked(h, z);
  double s = 0.0;
  for (std::size_t j = 0; j < z.size(); ++j) s += std::norm(phi[j] - z[j]);
  return std::sqrt(s);
}

std::vector<double> to_real(const Vec& z) {
  std::vector<double> x(2 * z.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    x[2 * j] = z[j].real();
    x[2 * j + 1] = z[j].imag();
  }
  return x;
}

Vec to_complex(const std::vector<double>& x) {
  Vec z(x.size() / 2);
  for (std::size_t j = 0; j < z.size(); ++j) z[j] = {x[2 * j], x[2 * j + 1]};
  return z;
}

// Nelder-Mead on x -> ||Phi(x) - x||^2.
Vec direct_search(std::span<const MultiPoly> h, const Vec& start, double scale,
                  std::uint64_t max_evals, std::uint64_t& evals) {
  const std::size_t dim = 2 * start.size();
  auto objective = [&](const std::vector<double>& x) {
    ++evals;
    const double r = residual_of(h, to_complex(x));
    return r * r;
  };
  std::vector<std::vector<double>> simplex(dim + 1, to_real(start));
  for (std::size_t k = 0; k < dim; ++k) simplex[k + 1][k] += scale;
  std::vector<double> values(dim + 1);
  for (std::size_t k = 0; k <= dim; ++k) values[k] = objective(simplex[k]);

  std::vector<std::size_t> order(dim + 1);
  while (evals < max_evals) {
    for (std::size_t k = 0; k <= dim; ++k) order[k] = k;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[dim - 1];
    if (values[best] < 1e-30) break;
    double spread = 0.0;
    for (std::size_t k = 0; k <= dim; ++k) {
      for (std::size_t c = 0; c < dim; ++c) {
        spread = std::max(spread, std::abs(simplex[k][c] - simplex[best][c]));
      }
    }
    if (spread < 1e-15) break;

    std::vector<double> centroid(dim, 0.0);
    for (std::size_t k = 0; k <= dim; ++k) {
      if (k == worst) continue;
      for (std::size_t c = 0; c < dim; ++c) centroid[c] += simplex[k][c] / dim;
    }
    auto along = [&](double t) {
      std::vector<double> x(dim);
      for (std::size_t c = 0; c < dim; ++c) x[c] = centroid[c] + t * (simplex[worst][c] - centroid[c]);
      return x;
    };
    const auto reflected = along(-1.0);
    const double fr = objective(reflected);
    if (fr < values[best]) {
      const auto expanded = along(-2.0);
      const double fe = objective(expanded);
      if (fe < fr) {
        simplex[worst] = expanded;
        values[worst] = fe;
      } else {
        simplex[worst] = reflected;
        values[worst] = fr;
      }
    } else if (fr < values[second]) {
      simplex[worst] = reflected;
      values[worst] = fr;
    } else {
      const auto contracted = fr < values[worst] ? along(-0.5) : along(0.5);
      const double fc = objective(contracted);
      if (fc < std::min(fr, values[worst])) {
        simplex[worst] = contracted;
        values[worst] = fc;
      } else {
        for (std::size_t k = 0; k <= dim; ++k) {
          if (k == best) continue;
          for (std::size_t c = 0; c < dim; ++c) {
            simplex[k][c] = simplex[best][c] + 0.5 * (simplex[k][c] - simplex[best][c]);
          }
          values[k] = objective(simplex[k]);
        }
      }
    }
  }
  const auto it = std::min_element(values.begin(), values.end());
  return to_complex(simplex[static_cast<std::size_t>(it - values.begin())]);
}

// Solves a small dense system in place by partial pivoting; false if singular.
bool solve_dense(std::vector<std::vector<double>>& a, std::vector<double>& b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    }
    if (std::abs(a[piv][col]) < 1e-300) return false;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t col = n; col-- > 0;) {
    for (std::size_t c = col + 1; c < n; ++c) b[col] -= a[col][c] * b[c];
    b[col] /= a[col][col];
  }
  return true;
}

// Newton on G(x) = Phi(x) - x with a central-difference Jacobian; a step is
// kept only if it lowers the residual (with up to 8 halvings).
Vec newton_polish(std::span<const MultiPoly> h, Vec z, double& residual, std::uint64_t& evals) {
  const std::size_t dim = 2 * z.size();
  auto G = [&](const std::vector<double>& x) {
    ++evals;
    const Vec zc = to_complex(x);
    const Vec phi = phi_unchecked(h, zc);
    std::vector<double> out(dim);
    for (std::size_t j = 0; j < zc.size(); ++j) {
      out[2 * j] = phi[j].real() - zc[j].real();
      out[2 * j + 1] = phi[j].imag() - zc[j].imag();
    }
    return out;
  };
  for (int step = 0; step < 40 && residual > 1e-15; ++step) {
    const auto x = to_real(z);
    std::vector<double> rhs = G(x);
    for (auto& v : rhs) v = -v;
    std::vector<std::vector<double>> jac(dim, std::vector<double>(dim));
    constexpr double kH = 1e-6;
    for (std::size_t c = 0; c < dim; ++c) {
      auto xp = x;
      auto xm = x;
      xp[c] += kH;
      xm[c] -= kH;
      const auto gp = G(xp);
      const auto gm = G(xm);
      for (std::size_t r = 0; r < dim; ++r) jac[r][c] = (gp[r] - gm[r]) / (2 * kH);
    }
    if (!solve_dense(jac, rhs)) break;
    bool improved = false;
    double t = 1.0;
    for (int halving = 0; halving < 8 && !improved; ++halving, t *= 0.5) {
      auto xn = x;
      for (std::size_t c = 0; c < dim; ++c) xn[c] += t * rhs[c];
      const Vec zn = to_complex(xn);
      const double rn = residual_of(h, zn);
      if (rn < residual) {
        z = zn;
        residual = rn;
        improved = true;
      }
    }
    if (!improved) break;
  }
  return z;
}

struct StartResult {
  Vec z;
  double residual = std::numeric_limits<double>::infinity();
  std::uint64_t iterations = 0;
  std::string method;
};

StartResult solve_from(std::span<const MultiPoly> h, Vec z, const FixedPointOptions& options) {
  StartResult res;
  double r = residual_of(h, z);
  double lambda = 0.5;
  std::uint64_t it = 0;
  for (; it < options.max_iter && r > 1e-15; ++it) {
    const Vec phi = phi_unchecked(h, z);
    Vec candidate(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) candidate[j] = z[j] + lambda * (phi[j] - z[j]);
    const double rc = residual_of(h, candidate);
    if (rc < r) {
      z = std::move(candidate);
      r = rc;
      lambda = std::min(1.0, lambda * 1.1);
    } else {
      lambda *= 0.5;
      if (lambda < 1e-12) break;
    }
  }
  res.method = "damped-iteration";
  std::uint64_t evals = it;
  if (r > options.tol) {
    z = direct_search(h, z, std::max(1e-3, std::min(0.1, r)), evals + options.max_iter, evals);
    r = residual_of(h, z);
    res.method = "direct-search";
  }
  z = newton_polish(h, std::move(z), r, evals);
  res.z = std::move(z);
  res.residual = r;
  res.iterations = evals;
  return res;
}

void fill_phi_residuals(std::span<const MultiPoly> h, FixedPointReport& report) {
  const Vec phi = phi_unchecked(h, report.z_star);
  report.phi_residuals.assign(report.n, 0.0);
  double s = 0.0;
  for (std::size_t j = 0; j < report.n; ++j) {
    report.phi_residuals[j] = std::abs(phi[j] - report.z_star[j]);
    s += report.phi_residuals[j] * report.phi_residuals[j];
  }
  report.phi_residual = std::sqrt(s);
  report.in_open_polydisk = std::all_of(report.z_star.begin(), report.z_star.end(),
                                        [](const auto& zj) { return std::abs(zj) < 1.0 - 1e-9; });
}

}  // namespace

std::vector<std::complex<double>> phi_map(std::span<const MultiPoly> h,
                                          std::span<const std::complex<double>> z) {
  check_phi_inputs(h);
  if (z.size() != h.size()) throw ValidationError("Phi: z and h differ in length");
  return phi_unchecked(h, z);
}

FixedPointReport find_fixed_point(std::span<const MultiPoly> h, const FixedPointOptions& options) {
  check_phi_inputs(h);
  if (!(options.tol > 0.0)) throw ValidationError("fixed-point tolerance must be positive");
  if (options.starts < 1) throw ValidationError("fixed-point solver needs at least one start");
  const auto n = static_cast<std::uint32_t>(h.size());

  std::mt19937_64 rng(options.seed);
  StartResult best;
  std::uint32_t best_index = 0;
  std::uint64_t total_iterations = 0;
  for (std::uint32_t s = 0; s < options.starts; ++s) {
    Vec start(n);
    if (s > 0) {
      start = sample_polydisk(rng, n);
      for (auto& zj : start) zj *= 0.9;
    }
    StartResult res = solve_from(h, std::move(start), options);
    total_iterations += res.iterations;
    if (res.residual < best.residual) {
      best = std::move(res);
      best_index = s;
    }
    if (best.residual <= 1e-15) break;
  }

  FixedPointReport report;
  report.n = n;
  report.z_star = best.z;
  report.start_index = best_index;
  report.iterations = total_iterations;
  report.method = best.method;
  fill_phi_residuals(h, report);
  if (!(report.phi_residual <= options.tol)) {
    throw ConvergenceError("fixed-point solver reached residual " +
                           std::to_string(report.phi_residual) + " > tol " +
                           std::to_string(options.tol) + " after " +
                           std::to_string(options.starts) + " starts");
  }
  return report;
}

FixedPointReport obstruction_report(const PrimeTable& primes, std::uint32_t n,
                                    std::span<const MultiPoly> h,
                                    const FixedPointOptions& options) {
  if (h.size() != n) throw ValidationError("obstruction report needs exactly n components of h");
  const MultiPoly g = lift(primes, make_witness_tuple(primes, n).g());
  FixedPointReport report = find_fixed_point(h, options);

  std::vector<std::complex<double>> point(2 * n);
  for (std::uint32_t j = 0; j < n; ++j) {
    point[j] = report.z_star[j];
    point[n + j] = std::conj(report.z_star[j]);
  }
  const EvalPoint at(point);
  double sup_h = 0.0;
  for (std::uint32_t j = 0; j < n; ++j) {
    const MultiPoly hg = h[j] * g;
    report.eq_residuals.push_back(std::abs(report.z_star[j] + evaluate(hg, at)));
    sup_h = std::max(sup_h, h[j].max_var() == 0
                                ? l1_norm(h[j])
                                : norm_est_torus(h[j], TorusStrategy::Random, 4096, options.seed)
                                      .value);
  }
  report.eq_bound = options.tol * (1.0 + 2.0 * sup_h);
  return report;
}

bool obstruction_certified(const FixedPointReport& report) {
  return report.in_open_polydisk && report.eq_residuals.size() == report.n &&
         std::all_of(report.eq_residuals.begin(), report.eq_residuals.end(),
                     [&](double r) { return r <= report.eq_bound; });
}

}  // namespace bohrkit
